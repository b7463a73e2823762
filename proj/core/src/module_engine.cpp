#include "module_engine.hpp"

#include "ferrand/errors.hpp"

#include <algorithm>

namespace ferrand::detail {

int ModuleOrder::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  if (!schreyer_) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ord_->compare(a, b);
  }
  const auto& ki = keys_[static_cast<std::size_t>(ca)];
  const auto& kj = keys_[static_cast<std::size_t>(cb)];
  if (ki.base != kj.base) return ki.base < kj.base ? 1 : -1;
  if (int c = ord_->compare(a * ki.total, b * kj.total); c != 0) return c;
  for (std::size_t t = 0; t < ki.chain.size() && t < kj.chain.size(); ++t)
    if (ki.chain[t] != kj.chain[t]) return ki.chain[t] < kj.chain[t] ? 1 : -1;
  return 0;
}

ModuleOrder ModuleOrder::induced(const std::vector<MVec>& elements) const {
  std::vector<SchreyerKey> keys;
  keys.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& lt = elements[i].front();
    SchreyerKey k;
    if (schreyer_) {
      const auto& below = keys_[static_cast<std::size_t>(lt.comp)];
      k.total = lt.mono * below.total;
      k.base = below.base;
      k.chain = below.chain;
    } else {
      k.total = lt.mono;
      k.base = lt.comp;
    }
    k.chain.push_back(static_cast<int>(i));
    keys.push_back(std::move(k));
  }
  return ModuleOrder(ord_, std::move(keys));
}

void sort_terms(MVec& v, const ModuleOrder& ord, const Field& field) {
  std::sort(v.begin(), v.end(), [&](const MTerm& x, const MTerm& y) { return ord.compare(x.mono, x.comp, y.mono, y.comp) > 0; });
  MVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

namespace {

// f[pos..] <- f[pos+1..] - factor * shift * g[1..]
void eliminate(MVec& f, std::size_t pos, const Scalar& factor, const Monomial& shift, const MVec& g,
               const ModuleOrder& ord, const Field& field, MVec& scratch) {
  scratch.clear();
  std::size_t i = pos + 1, j = 1;
  Monomial gm;
  if (j < g.size()) gm = shift * g[j].mono;
  while (i < f.size() || j < g.size()) {
    int cmp;
    if (i == f.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      scratch.push_back(std::move(f[i++]));
    } else {
      Scalar v = field.neg(field.mul(factor, g[j].coeff));
      if (cmp == 0) {
        v = field.add(f[i].coeff, v);
        ++i;
      }
      if (v != 0) scratch.push_back({gm, g[j].comp, std::move(v)});
      if (++j < g.size()) gm = shift * g[j].mono;
    }
  }
  f.resize(pos);
  for (auto& t : scratch) f.push_back(std::move(t));
}

}  // namespace

void add_scaled(MVec& f, const Scalar& c, const Monomial& m, const MVec& g, const ModuleOrder& ord, const Field& field) {
  if (c == 0 || g.empty()) return;
  MVec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(std::move(f[i++]));
      continue;
    }
    Monomial gm = m * g[j].mono;
    int cmp = i == f.size() ? -1 : ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(std::move(f[i++]));
    } else {
      Scalar v = field.mul(c, g[j].coeff);
      if (cmp == 0) {
        v = field.add(f[i].coeff, v);
        ++i;
      }
      if (v != 0) out.push_back({gm, g[j].comp, std::move(v)});
      ++j;
    }
  }
  f = std::move(out);
}

void make_primitive(MVec& v, const Field& field) {
  if (v.empty()) return;
  if (!field.is_rational()) {
    make_monic(v, field);
    return;
  }
  mpz_class den = 1, num = 0;
  for (const auto& t : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Scalar factor(den, num);
  factor.canonicalize();
  if (v.front().coeff < 0) factor = -factor;
  if (factor == 1) return;
  for (auto& t : v) t.coeff *= factor;
}

void make_monic(MVec& v, const Field& field, MVec* companion) {
  if (v.empty() || v.front().coeff == 1) return;
  Scalar inv = field.inverse(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
  if (companion)
    for (auto& t : *companion) t.coeff = field.mul(t.coeff, inv);
}

int vec_degree(const MVec& v, const Ring& ring, const std::vector<int>& twists) {
  return ring.weighted_degree(v.front().mono) + twists[static_cast<std::size_t>(v.front().comp)];
}

ModuleReducer::ModuleReducer(const std::vector<MVec>& basis, const ModuleOrder& ord, const Field& field)
    : basis_(basis), ord_(ord), field_(field) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].empty()) {
      lead_inv_.emplace_back(0);
      continue;
    }
    int c = basis[k].front().comp;
    if (static_cast<int>(by_comp_.size()) <= c) by_comp_.resize(static_cast<std::size_t>(c) + 1);
    by_comp_[static_cast<std::size_t>(c)].push_back(static_cast<int>(k));
    lead_inv_.push_back(field.inverse(basis[k].front().coeff));
  }
}

int ModuleReducer::find(const Monomial& m, int comp) const {
  if (comp >= static_cast<int>(by_comp_.size())) return -1;
  for (int k : by_comp_[static_cast<std::size_t>(comp)])
    if (basis_[static_cast<std::size_t>(k)].front().mono.divides(m)) return k;
  return -1;
}

MVec ModuleReducer::reduce(MVec f, std::vector<MVec>* quotients, bool full) const {
  MVec scratch;
  std::size_t pos = 0;
  while (pos < f.size()) {
    int k = find(f[pos].mono, f[pos].comp);
    if (k < 0) {
      if (!full) break;
      ++pos;
      continue;
    }
    const MVec& g = basis_[static_cast<std::size_t>(k)];
    Monomial shift = f[pos].mono / g.front().mono;
    Scalar factor = field_.mul(f[pos].coeff, lead_inv_[static_cast<std::size_t>(k)]);
    if (quotients) (*quotients)[static_cast<std::size_t>(k)].push_back({shift, 0, factor});
    eliminate(f, pos, factor, shift, g, ord_, field_, scratch);
  }
  return f;
}

namespace {

struct PendingPair {
  int degree;
  int a, b;
};

}  // namespace

ModuleGB module_buchberger(const std::vector<MVec>& gens, const RingPtr& ring, const std::vector<int>& twists,
                           bool track, int degree_limit) {
  const Field& field = ring->field();
  ModuleOrder ord(&ring->order());
  ModuleOrder src_ord(&ring->order());
  ModuleGB out;
  auto& G = out.elements;
  auto& T = out.transformation;

  std::vector<std::pair<int, int>> gen_queue;  // (degree, index)
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!gens[j].empty()) gen_queue.emplace_back(vec_degree(gens[j], *ring, twists), static_cast<int>(j));
  std::stable_sort(gen_queue.begin(), gen_queue.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t next_gen = 0;
  std::vector<PendingPair> pairs;

  auto add_element = [&](MVec h, MVec t) {
    make_monic(h, field, track ? &t : nullptr);
    int idx = static_cast<int>(G.size());
    for (int a = 0; a < idx; ++a) {
      const auto& ga = G[static_cast<std::size_t>(a)];
      if (ga.front().comp != h.front().comp) continue;
      Monomial l = ga.front().mono.lcm(h.front().mono);
      pairs.push_back({ring->weighted_degree(l) + twists[static_cast<std::size_t>(h.front().comp)], a, idx});
    }
    G.push_back(std::move(h));
    if (track) T.push_back(std::move(t));
  };

  while (next_gen < gen_queue.size() || !pairs.empty()) {
    // Smallest degree first; generators before pairs of the same degree.
    std::size_t best = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (best == pairs.size() || pairs[k].degree < pairs[best].degree) best = k;
    bool take_gen = next_gen < gen_queue.size() &&
                    (best == pairs.size() || gen_queue[next_gen].first <= pairs[best].degree);
    int degree = take_gen ? gen_queue[next_gen].first : pairs[best].degree;
    if (degree_limit >= 0 && degree > degree_limit) break;

    MVec h, t;
    if (take_gen) {
      int j = gen_queue[next_gen++].second;
      h = gens[static_cast<std::size_t>(j)];
      if (track) t.push_back({Monomial(ring->nvars()), j, Scalar(1)});
    } else {
      PendingPair p = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
      const auto& ga = G[static_cast<std::size_t>(p.a)];
      const auto& gb = G[static_cast<std::size_t>(p.b)];
      Monomial l = ga.front().mono.lcm(gb.front().mono);
      Monomial ma = l / ga.front().mono, mb = l / gb.front().mono;
      add_scaled(h, Scalar(1), ma, ga, ord, field);
      add_scaled(h, Scalar(-1), mb, gb, ord, field);
      if (track) {
        add_scaled(t, Scalar(1), ma, T[static_cast<std::size_t>(p.a)], src_ord, field);
        add_scaled(t, Scalar(-1), mb, T[static_cast<std::size_t>(p.b)], src_ord, field);
      }
    }
    if (h.empty()) continue;
    ModuleReducer reducer(G, ord, field);
    std::vector<MVec> q(G.size());
    h = reducer.reduce(std::move(h), track ? &q : nullptr);
    if (h.empty()) continue;
    if (track)
      for (std::size_t k = 0; k < q.size(); ++k)
        for (const auto& qt : q[k]) add_scaled(t, field.neg(qt.coeff), qt.mono, T[k], src_ord, field);
    add_element(std::move(h), std::move(t));
  }
  return out;
}

std::vector<MVec> schreyer_syzygies(const std::vector<MVec>& G, const ModuleOrder& below, const ModuleOrder& induced,
                                    const Field& field) {
  std::vector<MVec> out;
  ModuleReducer reducer(G, below, field);
  const int p = static_cast<int>(G.size());
  for (int a = 0; a < p; ++a) {
    const auto& ga = G[static_cast<std::size_t>(a)];
    std::vector<std::pair<int, Monomial>> cand;
    for (int b = a + 1; b < p; ++b) {
      const auto& gb = G[static_cast<std::size_t>(b)];
      if (gb.front().comp != ga.front().comp) continue;
      cand.emplace_back(b, ga.front().mono.lcm(gb.front().mono) / ga.front().mono);
    }
    for (std::size_t x = 0; x < cand.size(); ++x) {
      bool keep = true;
      for (std::size_t y = 0; y < cand.size() && keep; ++y) {
        if (x == y || !cand[y].second.divides(cand[x].second)) continue;
        if (cand[y].second != cand[x].second || y < x) keep = false;
      }
      if (!keep) continue;
      int b = cand[x].first;
      const auto& gb = G[static_cast<std::size_t>(b)];
      const Monomial& mab = cand[x].second;
      Monomial mba = ga.front().mono.lcm(gb.front().mono) / gb.front().mono;
      Scalar ca = field.inverse(ga.front().coeff), cb = field.neg(field.inverse(gb.front().coeff));
      MVec s;
      add_scaled(s, ca, mab, ga, below, field);
      add_scaled(s, cb, mba, gb, below, field);
      std::vector<MVec> q(G.size());
      MVec rem = reducer.reduce(std::move(s), &q);
      if (!rem.empty()) throw InvariantViolation("S-vector of a Groebner basis did not reduce to zero");
      MVec sigma{{mab, a, ca}, {mba, b, cb}};
      for (std::size_t k = 0; k < q.size(); ++k)
        for (auto& qt : q[k]) sigma.push_back({qt.mono, static_cast<int>(k), field.neg(qt.coeff)});
      sort_terms(sigma, induced, field);
      if (sigma.empty() || sigma.front().comp != a || sigma.front().mono != mab)
        throw InvariantViolation("Schreyer syzygy has an unexpected leading term");
      make_primitive(sigma, field);
      out.push_back(std::move(sigma));
    }
  }
  return out;
}

MVec column_to_vec(const std::vector<Poly>& column, const ModuleOrder& ord, const Field& field) {
  MVec v;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const auto& t : column[i].terms()) v.push_back({t.mono, static_cast<int>(i), t.coeff});
  sort_terms(v, ord, field);
  return v;
}

std::vector<Poly> vec_to_column(const MVec& v, const RingPtr& ring, int rank) {
  std::vector<std::vector<Term>> rows(static_cast<std::size_t>(rank));
  for (const auto& t : v) rows[static_cast<std::size_t>(t.comp)].push_back({t.mono, t.coeff});
  std::vector<Poly> col;
  col.reserve(rows.size());
  for (auto& r : rows) col.push_back(Poly::from_terms(ring, std::move(r)));
  return col;
}

}  // namespace ferrand::detail
