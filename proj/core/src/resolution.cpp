#include "ferrand/resolution.hpp"

#include "ferrand/errors.hpp"
#include "module_engine.hpp"

#include <algorithm>

namespace ferrand {

using detail::MTerm;
using detail::ModuleOrder;
using detail::MVec;

namespace {

const MonomialOrder& lex_order() {
  static const MonomialOrder kLex = MonomialOrder::lex();
  return kLex;
}

// Orders frame elements by leading component, then leading monomial
// lexicographically descending. This keeps the Schreyer frame of length at
// most the number of variables.
void sort_frame(std::vector<MVec>& elems) {
  std::stable_sort(elems.begin(), elems.end(), [](const MVec& a, const MVec& b) {
    if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
    return lex_order().compare(a.front().mono, b.front().mono) > 0;
  });
}

ModuleMap map_from_vectors(const RingPtr& ring, const std::vector<MVec>& cols, const std::vector<int>& target_twists,
                           std::vector<int>* source_twists_out = nullptr) {
  int rank = static_cast<int>(target_twists.size());
  std::vector<int> source_twists;
  std::vector<std::vector<Poly>> entries(static_cast<std::size_t>(rank));
  for (const auto& v : cols) {
    source_twists.push_back(detail::vec_degree(v, *ring, target_twists));
    auto col = detail::vec_to_column(v, ring, rank);
    for (int i = 0; i < rank; ++i) entries[static_cast<std::size_t>(i)].push_back(std::move(col[static_cast<std::size_t>(i)]));
  }
  if (source_twists_out) *source_twists_out = source_twists;
  return ModuleMap(ring, GradedFreeModule(std::move(source_twists)), GradedFreeModule(target_twists), std::move(entries));
}

// Keeps the candidates that are not in the submodule generated by `base`
// and the previously kept candidates, scanning by increasing degree.
std::vector<MVec> minimal_subset(std::vector<MVec> cands, const std::vector<MVec>& base, const RingPtr& ring,
                                 const std::vector<int>& twists) {
  const Field& field = ring->field();
  ModuleOrder ord(&ring->order());
  std::vector<std::pair<int, MVec>> sorted;
  for (auto& c : cands) {
    if (c.empty()) continue;
    detail::make_primitive(c, field);
    sorted.emplace_back(detail::vec_degree(c, *ring, twists), std::move(c));
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MVec> kept;
  std::vector<MVec> gens = base;
  detail::ModuleGB gb;
  int gb_degree = -1;
  bool dirty = true;
  for (auto& [d, c] : sorted) {
    if (dirty || gb_degree != d) {
      gb = detail::module_buchberger(gens, ring, twists, false, d);
      gb_degree = d;
      dirty = false;
    }
    detail::ModuleReducer reducer(gb.elements, ord, field);
    if (reducer.reduce(c).empty()) continue;
    kept.push_back(c);
    gens.push_back(std::move(c));
    dirty = true;
  }
  return kept;
}

std::vector<MVec> columns_as_vectors(const ModuleMap& m, const ModuleOrder& ord) {
  std::vector<MVec> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(detail::column_to_vec(m.column(j), ord, m.ring()->field()));
  return out;
}

// Generators g * e_i of I * F for a free module of the given rank.
std::vector<MVec> ideal_times_free(const Ideal& ideal, int rank, const ModuleOrder& ord) {
  std::vector<MVec> out;
  for (int i = 0; i < rank; ++i)
    for (const auto& g : ideal.generators()) {
      std::vector<Poly> col(static_cast<std::size_t>(rank), Poly(ideal.ring()));
      col[static_cast<std::size_t>(i)] = g;
      out.push_back(detail::column_to_vec(col, ord, ideal.ring()->field()));
    }
  return out;
}

}  // namespace

ModuleMap syzygies(const ModuleMap& m) {
  const RingPtr& ring = m.ring();
  const Field& field = ring->field();
  ModuleOrder ord(&ring->order());
  const auto& src_twists = m.source().twists();
  auto gens = columns_as_vectors(m, ord);
  auto gb = detail::module_buchberger(gens, ring, m.target().twists(), true);
  const auto& G = gb.elements;
  const auto& T = gb.transformation;

  std::vector<MVec> cands;
  if (!G.empty()) {
    ModuleOrder induced = ord.induced(G);
    for (const auto& sigma : detail::schreyer_syzygies(G, ord, induced, field)) {
      MVec v;
      for (const auto& t : sigma) detail::add_scaled(v, t.coeff, t.mono, T[static_cast<std::size_t>(t.comp)], ord, field);
      cands.push_back(std::move(v));
    }
  }
  detail::ModuleReducer reducer(G, ord, field);
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<MVec> q(G.size());
    MVec rem = reducer.reduce(gens[static_cast<std::size_t>(j)], &q);
    if (!rem.empty()) throw InvariantViolation("column does not reduce to zero by its own module basis");
    MVec v{{Monomial(ring->nvars()), j, Scalar(1)}};
    for (std::size_t k = 0; k < q.size(); ++k)
      for (const auto& qt : q[k]) detail::add_scaled(v, field.neg(qt.coeff), qt.mono, T[k], ord, field);
    cands.push_back(std::move(v));
  }
  auto kept = minimal_subset(std::move(cands), {}, ring, src_twists);
  return map_from_vectors(ring, kept, src_twists);
}

ModuleMap syzygies_over_quotient(const ModuleMap& m, const Ideal& ideal) {
  const RingPtr& ring = m.ring();
  if (!same_ring(ring, ideal.ring())) throw InputError("syzygies over a quotient: ring mismatch");
  ModuleOrder ord(&ring->order());
  const int s = m.cols();
  // Augment M with I * target so that kernel elements of the augmented map
  // project onto {v : M v in I * target}.
  auto cols = m.entries();
  std::vector<int> twists = m.source().twists();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& g : ideal.generators()) {
      for (int r = 0; r < m.rows(); ++r)
        cols[static_cast<std::size_t>(r)].push_back(r == i ? g : Poly(ring));
      twists.push_back(*g.homogeneous_degree() + m.target().twist(i));
    }
  ModuleMap aug(ring, GradedFreeModule(twists), m.target(), std::move(cols));
  ModuleMap k = syzygies(aug);
  const auto& gb = ideal.gb();
  std::vector<MVec> cands;
  for (int j = 0; j < k.cols(); ++j) {
    std::vector<Poly> col;
    for (int i = 0; i < s; ++i) col.push_back(gb.reduce(k.entry(i, j)));
    cands.push_back(detail::column_to_vec(col, ord, ring->field()));
  }
  auto base = ideal_times_free(ideal, s, ord);
  auto kept = minimal_subset(std::move(cands), base, ring, m.source().twists());
  return map_from_vectors(ring, kept, m.source().twists());
}

bool submodule_contains(const ModuleMap& module_gens, const ModuleMap& gens, const Ideal* ideal) {
  const RingPtr& ring = module_gens.ring();
  ModuleOrder ord(&ring->order());
  auto base = columns_as_vectors(module_gens, ord);
  if (ideal) {
    auto extra = ideal_times_free(*ideal, module_gens.rows(), ord);
    base.insert(base.end(), extra.begin(), extra.end());
  }
  auto gb = detail::module_buchberger(base, ring, module_gens.target().twists(), false);
  detail::ModuleReducer reducer(gb.elements, ord, ring->field());
  for (const auto& v : columns_as_vectors(gens, ord))
    if (!reducer.reduce(v).empty()) return false;
  return true;
}

FreeResolution schreyer_resolution(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  std::vector<ModuleMap> maps;
  if (ideal.is_zero()) return FreeResolution(ring, std::move(maps), true);

  ModuleOrder below(&ring->order());
  std::vector<MVec> cur;
  for (const auto& g : ideal.gb().elements()) {
    MVec v;
    for (const auto& t : g.terms()) v.push_back({t.mono, 0, t.coeff});
    cur.push_back(std::move(v));
  }
  sort_frame(cur);
  std::vector<int> twists_below{0};
  while (true) {
    std::vector<int> twists_cur;
    maps.push_back(map_from_vectors(ring, cur, twists_below, &twists_cur));
    if (static_cast<int>(maps.size()) > ring->nvars() + 1)
      throw InvariantViolation("Schreyer frame longer than the number of variables");
    ModuleOrder induced = below.induced(cur);
    auto next = detail::schreyer_syzygies(cur, below, induced, field);
    if (next.empty()) break;
    sort_frame(next);
    below = std::move(induced);
    twists_below = std::move(twists_cur);
    cur = std::move(next);
  }
  return FreeResolution(ring, std::move(maps), false);
}

FreeResolution minimalize(const FreeResolution& res) {
  const RingPtr& ring = res.ring();
  const Field& field = ring->field();
  const int L = res.length();
  std::vector<std::vector<std::vector<Poly>>> d;
  std::vector<std::vector<int>> tw;  // twists of F_0..F_L
  for (int i = 0; i <= L; ++i) tw.push_back(res.module(i).twists());
  for (const auto& m : res.maps()) d.push_back(m.entries());

  auto rows_of = [&](int k) { return static_cast<int>(tw[static_cast<std::size_t>(k)].size()); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < L && !changed; ++k) {
      auto& M = d[static_cast<std::size_t>(k)];
      const int nr = rows_of(k), nc = rows_of(k + 1);
      int pi = -1, pj = -1;
      for (int i = 0; i < nr && pi < 0; ++i)
        for (int j = 0; j < nc; ++j) {
          const Poly& e = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (!e.is_zero() && e.is_constant()) {
            pi = i;
            pj = j;
            break;
          }
        }
      if (pi < 0) continue;
      changed = true;
      const auto ui = static_cast<std::size_t>(pi), uj = static_cast<std::size_t>(pj);
      Scalar inv = field.inverse(M[ui][uj].leading_coeff());
      for (std::size_t l = 0; l < static_cast<std::size_t>(nr); ++l) {
        if (l == ui || M[l][uj].is_zero()) continue;
        Poly factor = M[l][uj] * inv;
        for (std::size_t m = 0; m < static_cast<std::size_t>(nc); ++m) {
          if (m == uj || M[ui][m].is_zero()) continue;
          M[l][m] -= factor * M[ui][m];
        }
      }
      M.erase(M.begin() + pi);
      for (auto& row : M) row.erase(row.begin() + pj);
      if (k + 1 < L) {
        auto& N = d[static_cast<std::size_t>(k + 1)];
        N.erase(N.begin() + pj);
      }
      if (k > 0)
        for (auto& row : d[static_cast<std::size_t>(k - 1)]) row.erase(row.begin() + pi);
      tw[static_cast<std::size_t>(k)].erase(tw[static_cast<std::size_t>(k)].begin() + pi);
      tw[static_cast<std::size_t>(k + 1)].erase(tw[static_cast<std::size_t>(k + 1)].begin() + pj);
    }
  }
  std::vector<ModuleMap> maps;
  for (int k = 0; k < L; ++k) {
    if (tw[static_cast<std::size_t>(k + 1)].empty()) break;
    maps.emplace_back(ring, GradedFreeModule(tw[static_cast<std::size_t>(k + 1)]), GradedFreeModule(tw[static_cast<std::size_t>(k)]),
                      std::move(d[static_cast<std::size_t>(k)]));
  }
  return FreeResolution(ring, std::move(maps), true);
}

FreeResolution free_resolution(const Ideal& ideal) { return minimalize(schreyer_resolution(ideal)); }

ExactnessReport certify(const FreeResolution& res, const Ideal& ideal) {
  ExactnessReport rep;
  rep.compositions_zero = true;
  for (int k = 0; k + 1 < res.length(); ++k)
    if (!res.maps()[static_cast<std::size_t>(k)].compose(res.maps()[static_cast<std::size_t>(k + 1)]).is_zero())
      rep.compositions_zero = false;
  if (res.length() > 0) {
    // The image of d_1 must be the ideal itself.
    std::vector<Poly> gens = res.maps().front().entries().front();
    Ideal image(ideal.ring(), gens);
    if (image != ideal) rep.compositions_zero = false;
  }
  std::vector<std::int64_t> alt;
  auto betti = res.betti();
  for (const auto& [key, v] : betti.beta) {
    auto j = static_cast<std::size_t>(key.second);
    if (alt.size() <= j) alt.resize(j + 1, 0);
    alt[j] += (key.first % 2 == 0 ? 1 : -1) * v;
  }
  auto expect = hilbert_numerator(ideal.gb().leading_monomials(), ideal.ring()->nvars());
  while (!alt.empty() && alt.back() == 0) alt.pop_back();
  while (!expect.empty() && expect.back() == 0) expect.pop_back();
  rep.hilbert_series_match = alt == expect;
  return rep;
}

bool is_acm(const Ideal& ideal) {
  if (ideal.hilbert().dimension != 2) throw InputError("ACM test expects a curve");
  return free_resolution(ideal).length() == ideal.ring()->nvars() - 2;
}

AgReport is_ag(const Ideal& ideal, std::uint64_t seed) {
  if (ideal.hilbert().dimension != 2) throw InputError("AG test expects a curve");
  AgReport rep;
  auto res = free_resolution(ideal);
  rep.acm = res.length() == ideal.ring()->nvars() - 2;
  rep.ag = rep.acm && res.module(res.length()).rank() == 1;
  rep.h_vector = h_vector(ideal, seed);
  return rep;
}

std::map<int, std::int64_t> rao_module(const FreeResolution& res) {
  std::map<int, std::int64_t> out;
  const RingPtr& ring = res.ring();
  const int nv = ring->nvars();
  if (res.length() < nv - 1) return out;
  if (res.length() > nv - 1) throw InputError("rao module: R/I has depth 0 (ideal not saturated)");
  const ModuleMap& last = res.maps()[static_cast<std::size_t>(nv - 2)];
  // Transpose F_{N-2}^* -> F_{N-1}^*; the basis of F_{N-1}^* sits in degree -b_i.
  std::vector<int> dual_twists;
  for (int b : last.source().twists()) dual_twists.push_back(-b);
  ModuleOrder ord(&ring->order());
  std::vector<MVec> gens;
  for (int k = 0; k < last.rows(); ++k) {
    std::vector<Poly> col;
    for (int i = 0; i < last.cols(); ++i) col.push_back(last.entry(k, i));
    MVec v = detail::column_to_vec(col, ord, ring->field());
    if (!v.empty()) gens.push_back(std::move(v));
  }
  auto gb = detail::module_buchberger(gens, ring, dual_twists, false);
  std::vector<std::vector<Monomial>> leads(dual_twists.size());
  for (const auto& g : gb.elements) leads[static_cast<std::size_t>(g.front().comp)].push_back(g.front().mono);
  // Sum of t^{twist_i} Q_i(t) over (1-t)^N, as a Laurent polynomial.
  int low = *std::min_element(dual_twists.begin(), dual_twists.end());
  std::vector<std::int64_t> num;
  for (std::size_t i = 0; i < dual_twists.size(); ++i) {
    auto q = hilbert_numerator(leads[i], nv);
    std::size_t shift = static_cast<std::size_t>(dual_twists[i] - low);
    if (num.size() < shift + q.size()) num.resize(shift + q.size(), 0);
    for (std::size_t k = 0; k < q.size(); ++k) num[shift + k] += q[k];
  }
  for (int rep = 0; rep < nv; ++rep) {
    std::int64_t acc = 0;
    for (auto& c : num) {
      acc += c;
      c = acc;
    }
    if (acc != 0) throw InvariantViolation("rao module: cokernel is not of finite length");
  }
  // Ext^{N-1}(R/I, R)_e is dual to H^1_m(R/I)_{-e-N}.
  for (std::size_t k = 0; k < num.size(); ++k)
    if (num[k] != 0) out[-(low + static_cast<int>(k)) - nv] = num[k];
  return out;
}

std::map<int, std::int64_t> rao_module(const Ideal& ideal) { return rao_module(free_resolution(ideal)); }

}  // namespace ferrand
