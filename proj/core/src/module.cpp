#include "ferrand/module.hpp"

#include "ferrand/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace ferrand {

std::map<int, int> GradedFreeModule::multiplicities() const {
  std::map<int, int> m;
  for (int d : twists_) ++m[d];
  return m;
}

std::string GradedFreeModule::to_string() const {
  if (twists_.empty()) return "0";
  std::string out;
  for (const auto& [d, k] : multiplicities()) {
    if (!out.empty()) out += "+";
    out += "R";
    if (k > 1) out += "^" + std::to_string(k);
    if (d != 0) out += "(" + std::to_string(-d) + ")";
  }
  return out;
}

ModuleMap::ModuleMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target,
                     std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != target_.rank()) throw InputError("module map: row count differs from target rank");
  for (int i = 0; i < target_.rank(); ++i) {
    auto& row = entries_[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != source_.rank()) throw InputError("module map: column count differs from source rank");
    for (int j = 0; j < source_.rank(); ++j) {
      auto& e = row[static_cast<std::size_t>(j)];
      if (!e.ring()) e = Poly(ring_);
      if (e.is_zero()) continue;
      if (!same_ring(e.ring(), ring_)) throw InputError("module map: entry from another ring");
      auto deg = e.homogeneous_degree();
      if (!deg || *deg != source_.twist(j) - target_.twist(i))
        throw InputError("module map: entry (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong degree");
    }
  }
}

ModuleMap ModuleMap::from_columns(RingPtr ring, GradedFreeModule target, const std::vector<std::vector<Poly>>& columns,
                                  int zero_twist) {
  std::vector<int> twists;
  std::vector<std::vector<Poly>> entries(static_cast<std::size_t>(target.rank()));
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != target.rank()) throw InputError("module map: column length differs from target rank");
    int tw = zero_twist;
    for (int i = 0; i < target.rank(); ++i) {
      const auto& e = col[static_cast<std::size_t>(i)];
      if (e.is_zero()) continue;
      auto deg = e.homogeneous_degree();
      if (!deg) throw InputError("module map: inhomogeneous entry");
      tw = *deg + target.twist(i);
      break;
    }
    twists.push_back(tw);
    for (int i = 0; i < target.rank(); ++i) entries[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
  }
  return ModuleMap(std::move(ring), GradedFreeModule(std::move(twists)), std::move(target), std::move(entries));
}

std::vector<Poly> ModuleMap::column(int j) const {
  std::vector<Poly> c;
  c.reserve(entries_.size());
  for (const auto& row : entries_) c.push_back(row[static_cast<std::size_t>(j)]);
  return c;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!(inner.target_ == source_)) throw InputError("compose: modules do not match");
  std::vector<std::vector<Poly>> e(static_cast<std::size_t>(rows()),
                                   std::vector<Poly>(static_cast<std::size_t>(inner.cols()), Poly(ring_)));
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      const Poly& a = entry(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < inner.cols(); ++j) {
        const Poly& b = inner.entry(k, j);
        if (!b.is_zero()) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a * b;
      }
    }
  return ModuleMap(ring_, inner.source_, target_, std::move(e));
}

bool ModuleMap::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

bool ModuleMap::has_unit_entry() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero() && e.is_constant()) return true;
  return false;
}

std::string ModuleMap::to_string() const {
  std::ostringstream os;
  os << target_.to_string() << " <- " << source_.to_string() << "\n";
  for (const auto& row : entries_) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].to_string();
    os << "]\n";
  }
  return os.str();
}

int BettiTable::at(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [k, v] : beta)
    if (k.first == i) s += v;
  return s;
}

int BettiTable::length() const {
  int l = 0;
  for (const auto& [k, v] : beta)
    if (v) l = std::max(l, k.first);
  return l;
}

std::string BettiTable::to_text() const {
  int len = length();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : beta) {
    if (!v) continue;
    int row = k.second - k.first;
    if (first) lo = hi = row, first = false;
    lo = std::min(lo, row);
    hi = std::max(hi, row);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(len) + 1, 1);
  for (int i = 0; i <= len; ++i) width[static_cast<std::size_t>(i)] = std::to_string(total(i)).size();
  std::string label_total = "total:";
  std::size_t label_w = label_total.size();
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream os;
  os << std::string(label_w, ' ');
  for (int i = 0; i <= len; ++i) os << ' ' << pad(std::to_string(i), width[static_cast<std::size_t>(i)]);
  os << '\n' << label_total;
  for (int i = 0; i <= len; ++i) os << ' ' << pad(std::to_string(total(i)), width[static_cast<std::size_t>(i)]);
  os << '\n';
  for (int row = lo; row <= hi; ++row) {
    os << pad(std::to_string(row) + ":", label_w);
    for (int i = 0; i <= len; ++i) {
      int v = at(i, i + row);
      os << ' ' << pad(v ? std::to_string(v) : ".", width[static_cast<std::size_t>(i)]);
    }
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, v] : beta)
    if (v) arr.push_back({k.first, k.second, v});
  return arr.dump();
}

const GradedFreeModule& FreeResolution::module(int i) const {
  static const GradedFreeModule kBase(std::vector<int>{0});
  static const GradedFreeModule kZero;
  if (i == 0) return maps_.empty() ? kBase : maps_.front().target();
  if (i < 0 || i > length()) return kZero;
  return maps_[static_cast<std::size_t>(i - 1)].source();
}

BettiTable FreeResolution::betti() const {
  BettiTable t;
  for (int i = 0; i <= length(); ++i)
    for (int d : module(i).twists()) ++t.beta[{i, d}];
  return t;
}

}  // namespace ferrand
