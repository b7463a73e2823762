#include "ferrand/invariants.hpp"

#include "ferrand/errors.hpp"
#include "ferrand/resolution.hpp"

#include <json.hpp>

#include <algorithm>

namespace ferrand {

namespace {

int socle_degree(const std::vector<BinaryForm>& forms) {
  int top = -1;
  for (int d = 0;; ++d) {
    if (binary_quotient_dim(forms, d) == 0) return top;
    top = d;
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::int64_t binary_quotient_dim(const std::vector<BinaryForm>& forms, int degree) {
  if (degree < 0) return 0;
  const Field* field = nullptr;
  std::vector<Vec> rows;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    field = &f.ring()->field();
    const int e = *f.homogeneous_degree();
    if (e > degree) continue;
    for (int k = 0; k <= degree - e; ++k) {
      Vec v(static_cast<std::size_t>(degree + 1));
      for (const auto& term : f.terms()) v[static_cast<std::size_t>(term.mono[1] + k)] = term.coeff;
      rows.push_back(std::move(v));
    }
  }
  if (!field || rows.empty()) return degree + 1;
  Matrix m(static_cast<int>(rows.size()), degree + 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c <= degree; ++c) m.at(static_cast<int>(i), c) = rows[i][static_cast<std::size_t>(c)];
  return degree + 1 - rank(m, *field);
}

RaoFormulaValue rao_formula(const MuMap& mu, int j) {
  RaoFormulaValue v;
  v.value = binary_quotient_dim(mu.entries(), mu.r() * j - mu.r() - 2 + mu.a());
  if (j == 2) {
    v.value += binomial(mu.r() - 1, 2);
    v.bound = true;
  }
  return v;
}

std::pair<int, int> rao_window(const MuMap& mu) {
  const int r = mu.r(), a = mu.a();
  const int s = socle_degree(mu.entries());
  int lo = static_cast<int>(floor_div(r + 2 - a, r)) - 1;
  int hi = static_cast<int>(floor_div(s + r + 2 - a + r - 1, r)) + 1;
  return {std::min(lo, 1), std::max(hi, 3)};
}

bool RaoProfile::formula_agrees() const {
  for (const auto& [j, v] : values) {
    auto it = formula.find(j);
    if (it == formula.end()) return false;
    if (j == 2 ? v > it->second : v != it->second) return false;
  }
  return true;
}

std::string RaoProfile::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  auto name = [](RaoSource s) {
    switch (s) {
      case RaoSource::Formula: return "formula";
      case RaoSource::Direct: return "direct";
      case RaoSource::BothAgree: return "both-agree";
      case RaoSource::Disagree: return "disagree";
    }
    return "";
  };
  for (const auto& [j, v] : values) {
    out["values"][std::to_string(j)] = v;
    out["formula"][std::to_string(j)] = formula.at(j);
    out["source"][std::to_string(j)] = name(source.at(j));
  }
  return out.dump();
}

std::int64_t rao_direct(const DoubleCurve& x, int j, GammaSections* gamma) {
  if (gamma) return rao_from_sections(*gamma, j);
  GammaSections g(x.ideal());
  return rao_from_sections(g, j);
}

RaoProfile rao_profile(const DoubleCurve& x) {
  GammaSections gamma(x.ideal());
  auto [lo, hi] = rao_window(x.mu());
  RaoProfile p;
  auto fill = [&](int j) {
    std::int64_t direct = rao_from_sections(gamma, j);
    auto f = rao_formula(x.mu(), j);
    p.values[j] = direct;
    p.formula[j] = f.value;
    if (f.bound)
      p.source[j] = RaoSource::Direct;
    else
      p.source[j] = direct == f.value ? RaoSource::BothAgree : RaoSource::Disagree;
  };
  for (int j = lo; j <= hi; ++j) fill(j);
  while (p.values.at(lo) != 0) fill(--lo);
  while (p.values.at(hi) != 0) fill(++hi);
  return p;
}

std::int64_t genus(const DoubleCurve& x) {
  auto g = x.ideal().hilbert().genus();
  if (!g) throw InvariantViolation("doubling is not a curve");
  if (*g != x.mu().genus())
    throw InvariantViolation("genus " + std::to_string(*g) + " differs from r + 1 - a = " + std::to_string(x.mu().genus()));
  return *g;
}

TripleClass classify_triple(int r, int g, int n) {
  TripleClass t;
  t.degree = 2 * r;
  t.genus = g;
  t.n = n;
  t.ag_admissible = (g == r + 1 && n == r) || (g == 1 && n == 2 * r - 1);
  return t;
}

TripleClass triple(const DoubleCurve& x) { return classify_triple(x.mu().r(), static_cast<int>(genus(x)), x.mu().n()); }

std::int64_t family_dimension(int r, int g, int n) {
  return static_cast<std::int64_t>(n + 1) * (2 * r + 1 - g) - 7 + 2 * g;
}

std::int64_t rnc_family_dimension(int r, int n) { return static_cast<std::int64_t>(n + 1) * (r + 1) - 4; }

std::vector<std::int64_t> second_difference(const Ideal& ideal, int last) {
  std::vector<std::int64_t> out;
  auto h = [&](int d) { return hilbert_function(ideal, d); };
  for (int d = 0; d <= last; ++d) out.push_back(h(d) - 2 * h(d - 1) + h(d - 2));
  return out;
}

std::string AnalyzeReport::to_json() const {
  nlohmann::json j;
  j["triple"] = {triple.degree, triple.genus, triple.n};
  j["ag_admissible"] = triple.ag_admissible;
  j["genus"] = genus;
  j["hilbert_polynomial"] = hilbert_polynomial;
  j["h_vector"] = h_vector;
  nlohmann::json r = nlohmann::json::object();
  for (const auto& [k, v] : rao.values) r[std::to_string(k)] = v;
  j["rao"] = r;
  j["acm"] = acm;
  j["ag"] = ag;
  j["family_dimension"] = family_dimension;
  return j.dump();
}

AnalyzeReport analyze(const DoubleCurve& x, std::uint64_t seed) {
  AnalyzeReport rep;
  rep.triple = triple(x);
  rep.genus = rep.triple.genus;
  rep.hilbert_polynomial = x.ideal().hilbert().polynomial_string();
  auto ag = is_ag(x.ideal(), seed);
  rep.h_vector = ag.h_vector.empty() ? h_vector(x.ideal(), seed) : ag.h_vector;
  rep.rao = rao_profile(x);
  rep.acm = ag.acm;
  rep.ag = ag.ag;
  rep.family_dimension = family_dimension(x.mu().r(), rep.genus, x.mu().n());
  return rep;
}

std::string TangentReport::to_json() const {
  nlohmann::json j;
  j["h0_normal"] = h0_normal;
  j["family_dimension"] = family_dimension;
  j["smooth_point_evidence"] = smooth_point_evidence;
  j["t_used"] = t_used;
  return j.dump();
}

TangentReport tangent_vs_family(const DoubleCurve& x) {
  TangentReport rep;
  auto res = h0_normal_sheaf(x.ideal());
  const int r = x.mu().r(), n = x.mu().n();
  const auto g = genus(x);
  rep.h0_normal = res.h0;
  rep.t_used = res.t_used;
  rep.family_dimension = family_dimension(r, static_cast<int>(g), n);
  rep.conic_component_dimension = r == 2 ? (n - 1) * (5 - g) + 3 : 0;
  rep.smooth_point_evidence = r == 2 && g <= -2 && rep.h0_normal == rep.conic_component_dimension;
  return rep;
}

}  // namespace ferrand
