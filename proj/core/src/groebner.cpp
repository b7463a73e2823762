#include "ferrand/groebner.hpp"

#include "ferrand/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ferrand {

namespace {

struct Reducer {
  Monomial lead;
  const Poly* poly;
  Scalar lead_inv;
};

std::vector<Reducer> make_reducers(const std::vector<Poly>& basis) {
  std::vector<Reducer> out;
  out.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) {
      out.push_back({Monomial(), nullptr, Scalar(0)});
      continue;
    }
    out.push_back({g.leading_monomial(), &g, g.ring()->field().inverse(g.leading_coeff())});
  }
  return out;
}

int find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  for (std::size_t k = 0; k < reducers.size(); ++k)
    if (reducers[k].poly && reducers[k].lead.divides(m)) return static_cast<int>(k);
  return -1;
}

// Replaces terms[pos..] with terms[pos+1..] - factor * shift * tail(g).
void eliminate_term(std::vector<Term>& terms, std::size_t pos, const Scalar& factor, const Monomial& shift,
                    const Poly& g, std::vector<Term>& scratch) {
  const auto& ord = g.ring()->order();
  const auto& field = g.ring()->field();
  const auto& gt = g.terms();
  scratch.clear();
  std::size_t i = pos + 1, j = 1;
  Monomial gm;
  if (j < gt.size()) gm = shift * gt[j].mono;
  while (i < terms.size() || j < gt.size()) {
    int cmp;
    if (i == terms.size())
      cmp = -1;
    else if (j == gt.size())
      cmp = 1;
    else
      cmp = ord.compare(terms[i].mono, gm);
    if (cmp > 0) {
      scratch.push_back(std::move(terms[i++]));
    } else {
      Scalar v = field.neg(field.mul(factor, gt[j].coeff));
      if (cmp == 0) {
        v = field.add(terms[i].coeff, v);
        ++i;
      }
      if (v != 0) scratch.push_back({gm, std::move(v)});
      if (++j < gt.size()) gm = shift * gt[j].mono;
    }
  }
  terms.resize(pos);
  for (auto& t : scratch) terms.push_back(std::move(t));
}

// Reduces `terms` by the reducers. When `full` is false only the leading
// term is reduced. Quotient contributions are reported through `record`.
template <class Record>
void reduce_terms(std::vector<Term>& terms, const std::vector<Reducer>& reducers, bool full, const Field& field,
                  Record&& record) {
  std::vector<Term> scratch;
  std::size_t pos = 0;
  while (pos < terms.size()) {
    int k = find_reducer(reducers, terms[pos].mono);
    if (k < 0) {
      if (!full) return;
      ++pos;
      continue;
    }
    const Reducer& red = reducers[static_cast<std::size_t>(k)];
    Scalar factor = field.mul(terms[pos].coeff, red.lead_inv);
    Monomial shift = terms[pos].mono / red.lead;
    record(k, shift, factor);
    eliminate_term(terms, pos, factor, shift, *red.poly, scratch);
  }
}

}  // namespace

DivisionResult divide(const Poly& f, const std::vector<Poly>& basis) {
  DivisionResult out;
  out.remainder = Poly(f.ring());
  for (std::size_t k = 0; k < basis.size(); ++k) out.quotients.emplace_back(f.ring());
  if (f.is_zero()) return out;
  auto reducers = make_reducers(basis);
  std::vector<Term> terms = f.terms();
  std::vector<std::vector<Term>> qterms(basis.size());
  reduce_terms(terms, reducers, true, f.ring()->field(),
               [&](int k, const Monomial& shift, const Scalar& factor) {
                 qterms[static_cast<std::size_t>(k)].push_back({shift, factor});
               });
  out.remainder = Poly::from_terms(f.ring(), std::move(terms));
  for (std::size_t k = 0; k < basis.size(); ++k)
    out.quotients[k] = Poly::from_terms(f.ring(), std::move(qterms[k]));
  return out;
}

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  if (f.is_zero()) return f;
  auto reducers = make_reducers(basis);
  std::vector<Term> terms = f.terms();
  reduce_terms(terms, reducers, true, f.ring()->field(), [](int, const Monomial&, const Scalar&) {});
  return Poly::from_terms(f.ring(), std::move(terms));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Poly> elements, bool reduced,
                             std::optional<std::vector<std::vector<Poly>>> transformation, int degree_limit)
    : ring_(std::move(ring)),
      elements_(std::move(elements)),
      reduced_(reduced),
      transformation_(std::move(transformation)),
      degree_limit_(degree_limit) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto& field = f.ring()->field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly s = f.mul_term(l / f.leading_monomial(), field.inverse(f.leading_coeff()));
  s.add_scaled(field.neg(field.inverse(g.leading_coeff())), l / g.leading_monomial(), g);
  return s;
}

bool is_groebner_basis(const std::vector<Poly>& polys) {
  std::vector<Poly> basis;
  for (const auto& p : polys)
    if (!p.is_zero()) basis.push_back(p);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, const MonomialOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

namespace {

struct Pair {
  int i, j;  // j == -1 marks an input generator i
  Monomial lcm;
  int degree;
};

class BuchbergerState {
 public:
  BuchbergerState(RingPtr ring, const std::vector<Poly>& gens, const BuchbergerOptions& opts)
      : ring_(std::move(ring)), field_(ring_->field()), opts_(opts), gens_(gens) {}

  GroebnerBasis run();

 private:
  struct Element {
    Poly poly;
    std::vector<Poly> rep;
    bool active = true;
  };

  Poly reduce_with_rep(Poly p, std::vector<Poly>* rep, bool full);
  void update(int h);
  std::vector<Reducer> reducers() const;

  RingPtr ring_;
  Field field_;
  BuchbergerOptions opts_;
  const std::vector<Poly>& gens_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
};

std::vector<Reducer> BuchbergerState::reducers() const {
  std::vector<Reducer> out;
  out.reserve(basis_.size());
  for (const auto& e : basis_)
    out.push_back({e.poly.leading_monomial(), &e.poly, field_.inverse(e.poly.leading_coeff())});
  return out;
}

Poly BuchbergerState::reduce_with_rep(Poly p, std::vector<Poly>* rep, bool full) {
  if (p.is_zero()) return p;
  auto reds = reducers();
  std::vector<Term> terms = p.terms();
  reduce_terms(terms, reds, full, field_, [&](int k, const Monomial& shift, const Scalar& factor) {
    if (!rep) return;
    const auto& src = basis_[static_cast<std::size_t>(k)].rep;
    for (std::size_t c = 0; c < rep->size(); ++c) (*rep)[c].add_scaled(field_.neg(factor), shift, src[c]);
  });
  return Poly::from_terms(ring_, std::move(terms));
}

void BuchbergerState::update(int h) {
  const Monomial& lh = basis_[static_cast<std::size_t>(h)].poly.leading_monomial();
  auto wdeg = [&](const Monomial& m) { return ring_->weighted_degree(m); };
  // Candidate pairs (g, h) for active g.
  std::vector<Pair> cand;
  for (int g = 0; g < h; ++g) {
    if (!basis_[static_cast<std::size_t>(g)].active) continue;
    Monomial l = basis_[static_cast<std::size_t>(g)].poly.leading_monomial().lcm(lh);
    cand.push_back({g, h, l, wdeg(l)});
  }
  // Chain criterion among the new pairs, keeping coprime pairs until the end.
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    const Monomial& lg = basis_[static_cast<std::size_t>(cand[a].i)].poly.leading_monomial();
    bool keep = true;
    if (!lg.coprime(lh)) {
      for (std::size_t b = 0; b < cand.size() && keep; ++b) {
        if (b == a) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          // Equal lcms: keep only the first of the group.
          if (cand[b].lcm == cand[a].lcm && b > a) continue;
          keep = false;
        }
      }
    }
    if (keep) kept.push_back(cand[a]);
  }
  // Product criterion.
  std::vector<Pair> fresh;
  for (auto& p : kept) {
    const Monomial& lg = basis_[static_cast<std::size_t>(p.i)].poly.leading_monomial();
    if (!lg.coprime(lh)) fresh.push_back(p);
  }
  // Old pairs made redundant by h.
  std::vector<Pair> old;
  for (auto& p : pairs_) {
    if (p.j >= 0 && lh.divides(p.lcm)) {
      const Monomial& li = basis_[static_cast<std::size_t>(p.i)].poly.leading_monomial();
      const Monomial& lj = basis_[static_cast<std::size_t>(p.j)].poly.leading_monomial();
      if (li.lcm(lh) != p.lcm && lj.lcm(lh) != p.lcm) continue;
    }
    old.push_back(std::move(p));
  }
  pairs_ = std::move(old);
  for (auto& p : fresh) pairs_.push_back(std::move(p));
  for (int g = 0; g < h; ++g) {
    auto& e = basis_[static_cast<std::size_t>(g)];
    if (e.active && lh.divides(e.poly.leading_monomial())) e.active = false;
  }
}

GroebnerBasis BuchbergerState::run() {
  const std::size_t ngens = gens_.size();
  for (std::size_t k = 0; k < ngens; ++k) {
    const Poly& g = gens_[k];
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InputError("non-homogeneous generator: " + g.to_string());
    pairs_.push_back({static_cast<int>(k), -1, g.leading_monomial(), *g.homogeneous_degree()});
  }
  const auto& ord = ring_->order();
  while (!pairs_.empty()) {
    int d = pairs_[0].degree;
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    if (opts_.degree_limit >= 0 && d > opts_.degree_limit) break;
    std::vector<Pair> batch, rest;
    for (auto& p : pairs_) (p.degree == d ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::stable_sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    for (const auto& p : batch) {
      Poly s(ring_);
      std::vector<Poly> rep;
      std::vector<Poly>* rep_ptr = opts_.track ? &rep : nullptr;
      if (opts_.track) rep.assign(ngens, Poly(ring_));
      if (p.j < 0) {
        s = gens_[static_cast<std::size_t>(p.i)];
        if (opts_.track) rep[static_cast<std::size_t>(p.i)] = Poly::constant(ring_, 1);
      } else {
        const auto& ei = basis_[static_cast<std::size_t>(p.i)];
        const auto& ej = basis_[static_cast<std::size_t>(p.j)];
        Scalar ci = field_.inverse(ei.poly.leading_coeff());
        Scalar cj = field_.neg(field_.inverse(ej.poly.leading_coeff()));
        Monomial mi = p.lcm / ei.poly.leading_monomial();
        Monomial mj = p.lcm / ej.poly.leading_monomial();
        s = ei.poly.mul_term(mi, ci);
        s.add_scaled(cj, mj, ej.poly);
        if (opts_.track)
          for (std::size_t c = 0; c < ngens; ++c) {
            rep[c].add_scaled(ci, mi, ei.rep[c]);
            rep[c].add_scaled(cj, mj, ej.rep[c]);
          }
      }
      s = reduce_with_rep(std::move(s), rep_ptr, true);
      if (s.is_zero()) continue;
      Poly prim = s.primitive();
      if (opts_.track && prim.leading_coeff() != s.leading_coeff()) {
        Scalar factor = field_.div(prim.leading_coeff(), s.leading_coeff());
        for (auto& q : rep) q *= factor;
      }
      basis_.push_back({std::move(prim), std::move(rep), true});
      update(static_cast<int>(basis_.size()) - 1);
    }
  }
  // Minimal basis: active elements; then inter-reduce tails and make monic.
  std::vector<int> active;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].active) active.push_back(static_cast<int>(k));
  std::sort(active.begin(), active.end(), [&](int a, int b) {
    return ord.compare(basis_[static_cast<std::size_t>(a)].poly.leading_monomial(),
                       basis_[static_cast<std::size_t>(b)].poly.leading_monomial()) < 0;
  });
  // Reduce tails against all basis elements; leading terms are untouched
  // because no other active leading monomial divides them.
  std::vector<Poly> out;
  std::vector<std::vector<Poly>> trans;
  auto reds = reducers();
  for (int k : active) {
    const auto& e = basis_[static_cast<std::size_t>(k)];
    std::vector<Term> terms = e.poly.terms();
    std::vector<Term> head(terms.begin(), terms.begin() + 1);
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    std::vector<Poly> rep = e.rep;
    reduce_terms(tail, reds, true, field_, [&](int j, const Monomial& shift, const Scalar& factor) {
      if (!opts_.track) return;
      const auto& src = basis_[static_cast<std::size_t>(j)].rep;
      for (std::size_t c = 0; c < rep.size(); ++c) rep[c].add_scaled(field_.neg(factor), shift, src[c]);
    });
    for (auto& t : tail) head.push_back(std::move(t));
    Poly p = Poly::from_terms(ring_, std::move(head));
    Scalar inv = field_.inverse(p.leading_coeff());
    p *= inv;
    if (opts_.track) {
      for (auto& q : rep) q *= inv;
      trans.push_back(std::move(rep));
    }
    out.push_back(std::move(p));
  }
  std::optional<std::vector<std::vector<Poly>>> transformation;
  if (opts_.track) transformation = std::move(trans);
  return GroebnerBasis(ring_, std::move(out), true, std::move(transformation), opts_.degree_limit);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const BuchbergerOptions& options) {
  RingPtr ring;
  for (const auto& g : gens)
    if (g.ring()) {
      if (ring && !same_ring(ring, g.ring())) throw InputError("generators live in different rings");
      ring = g.ring();
    }
  if (!ring) throw InputError("cannot infer the ring of an empty generator list");
  BuchbergerState state(ring, gens, options);
  return state.run();
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const RingPtr& ring, const BuchbergerOptions& options) {
  std::vector<Poly> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.is_zero() ? Poly(ring) : g.in_ring(ring));
  if (moved.empty()) return GroebnerBasis(ring, {}, true);
  BuchbergerState state(ring, moved, options);
  return state.run();
}

}  // namespace ferrand
