#include "ferrand/families.hpp"

#include "ferrand/errors.hpp"

#include <json.hpp>

namespace ferrand {

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "g-1") return FamilyKind::GenusMinusOne;
  if (name == "g0") return FamilyKind::GenusZero;
  if (name == "g1") return FamilyKind::GenusOne;
  if (name == "g3") return FamilyKind::GenusThree;
  if (name == "constant") return FamilyKind::Constant;
  throw InputError("unknown family '" + name + "' (expected g-1, g0, g1, g3 or constant)");
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::GenusMinusOne: return "g-1";
    case FamilyKind::GenusZero: return "g0";
    case FamilyKind::GenusOne: return "g1";
    case FamilyKind::GenusThree: return "g3";
    case FamilyKind::Constant: return "constant";
  }
  return "";
}

RingPtr family_ring() {
  return Ring::make({"x0", "x1", "x2", "x3", "s"}, Field::rationals(), MonomialOrder::block({4, 1}), {1, 1, 1, 1, 0});
}

FamilyIdeal build_family(FamilyKind kind) {
  auto ring = family_ring();
  auto id = [&](std::vector<std::string> g) { return Ideal::parse(ring, g); };
  switch (kind) {
    case FamilyKind::GenusMinusOne:
      return {kind, "intersection", intersect(id({"w", "x*z-y^2"}), id({"w+s*x", "s*z^2+x*z-y^2"}))};
    case FamilyKind::GenusZero:
      return {kind, "quotient",
              quotient(id({"w^2+s*(x*y-z*w)", "y*(x*z-y^2)-z^2*w"}), id({"x*y-z*w", "y^2", "y*w", "w^2"}))};
    case FamilyKind::GenusOne:
      return {kind, "literal", id({"w^2+s*(x^2+y^2+z^2)", "x*z-y^2-z*w"})};
    case FamilyKind::GenusThree:
      return {kind, "literal", id({"w-s*x", "(x*z-y^2)^2+s*x^4"})};
    case FamilyKind::Constant:
      return {kind, "literal", id({"w", "x*z-y^2"})};
  }
  throw InputError("unknown family");
}

Ideal fiber(const FamilyIdeal& family, const Scalar& c) {
  auto target = Ring::projective(3);
  std::vector<Poly> images;
  for (int i = 0; i < 4; ++i) images.push_back(Poly::variable(target, i));
  images.push_back(Poly::constant(target, c));
  std::vector<Poly> gens;
  for (const auto& g : family.ideal.generators()) {
    Poly h = g.substitute(target, images);
    if (!h.is_zero()) gens.push_back(h);
  }
  Ideal sat = saturate(Ideal(target, gens));
  if (sat.hilbert().dimension != 2) throw InvariantViolation("fiber at s = " + scalar_to_string(c) + " is not a curve");
  return sat;
}

std::string FlatnessEvidence::to_json() const {
  nlohmann::json j;
  j["kind"] = "evidence";
  j["constant_hilbert_polynomial"] = constant_hilbert_polynomial;
  j["fibers"] = nlohmann::json::array();
  for (const auto& f : fibers)
    j["fibers"].push_back({{"parameter", scalar_to_string(f.parameter)},
                           {"hilbert_polynomial", f.hilbert_polynomial},
                           {"genus", f.genus}});
  return j.dump();
}

FlatnessEvidence flatness_evidence(const FamilyIdeal& family, const std::vector<Scalar>& samples) {
  FlatnessEvidence ev;
  ev.constant_hilbert_polynomial = true;
  for (const auto& c : samples) {
    Ideal f = fiber(family, c);
    FiberRow row{c, f.hilbert().polynomial_string(), f.hilbert().genus().value_or(0)};
    if (!ev.fibers.empty() && row.hilbert_polynomial != ev.fibers.front().hilbert_polynomial)
      ev.constant_hilbert_polynomial = false;
    ev.fibers.push_back(std::move(row));
  }
  return ev;
}

}  // namespace ferrand
