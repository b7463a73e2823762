#include "ferrand/json_io.hpp"

#include "ferrand/errors.hpp"

#include <json.hpp>

namespace ferrand {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field_of(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("bad value for '") + key + "'");
  }
}

}  // namespace

std::string ideal_to_json(const Ideal& ideal) {
  const auto& ring = *ideal.ring();
  json doc;
  doc["vars"] = ring.names();
  doc["field"] = ring.field().tag();
  doc["order"] = ring.order().name();
  doc["generators"] = json::array();
  for (const auto& g : ideal.generators()) doc["generators"].push_back(g.to_string());
  return doc.dump();
}

Ideal ideal_from_json(const std::string& text) {
  json doc = parse_document(text);
  auto vars = field_of<std::vector<std::string>>(doc, "vars");
  Field field = doc.contains("field") ? Field::from_tag(field_of<std::string>(doc, "field")) : Field::rationals();
  MonomialOrder order =
      doc.contains("order") ? MonomialOrder::from_name(field_of<std::string>(doc, "order")) : MonomialOrder::degrevlex();
  auto ring = Ring::make(vars, field, order);
  return Ideal::parse(ring, field_of<std::vector<std::string>>(doc, "generators"));
}

std::string mu_to_json(const MuMap& mu) {
  json doc;
  doc["r"] = mu.r();
  doc["n"] = mu.n();
  doc["a"] = mu.a();
  doc["block1"] = json::array();
  doc["block2"] = json::array();
  for (const auto& f : mu.block1()) doc["block1"].push_back(f.to_string());
  for (const auto& f : mu.block2()) doc["block2"].push_back(f.to_string());
  if (!mu.binary()->field().is_rational()) doc["field"] = mu.binary()->field().tag();
  return doc.dump();
}

MuMap mu_from_json(const std::string& text) {
  json doc = parse_document(text);
  int r = field_of<int>(doc, "r"), n = field_of<int>(doc, "n"), a = field_of<int>(doc, "a");
  auto entries = field_of<std::vector<std::string>>(doc, "block1");
  auto b2 = field_of<std::vector<std::string>>(doc, "block2");
  entries.insert(entries.end(), b2.begin(), b2.end());
  Field field = doc.contains("field") ? Field::from_tag(field_of<std::string>(doc, "field")) : Field::rationals();
  return MuMap::parse(r, n, a, entries, field);
}

}  // namespace ferrand
