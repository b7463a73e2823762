#include "ferrand/errors.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/linalg.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace ferrand {

namespace {

void check_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw InputError("ideals live in different rings");
}

// Maps polynomials along a variable permutation: source variable i becomes
// target variable perm[i].
Poly permute(const Poly& f, const RingPtr& target, const std::vector<int>& perm) {
  std::vector<Poly> images;
  for (int p : perm) images.push_back(Poly::variable(target, p));
  return f.substitute(target, images);
}

// Order blocks of `ring` as explicit sizes (a single block for degrevlex).
std::vector<int> block_sizes(const Ring& ring) {
  if (ring.order().kind() == MonomialOrder::Kind::Block) return ring.order().blocks();
  return {ring.nvars()};
}

// Block id of every variable.
std::vector<int> block_of(const Ring& ring) {
  std::vector<int> id;
  int b = 0;
  for (int s : block_sizes(ring)) {
    for (int i = 0; i < s; ++i) id.push_back(b);
    ++b;
  }
  return id;
}

// Restricts the order blocks of `ring` to the variables listed in `vars`
// (kept in that order) and returns the corresponding sizes.
std::vector<int> restricted_blocks(const Ring& ring, const std::vector<int>& vars) {
  auto id = block_of(ring);
  std::vector<int> sizes;
  int last = -1;
  for (int v : vars) {
    int b = id[static_cast<std::size_t>(v)];
    if (b != last) {
      sizes.push_back(0);
      last = b;
    }
    ++sizes.back();
  }
  return sizes;
}

MonomialOrder order_from_blocks(const std::vector<int>& sizes) {
  return sizes.size() == 1 ? MonomialOrder::degrevlex() : MonomialOrder::block(sizes);
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  auto gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, int k) {
  if (k < 0) throw InputError("negative ideal power");
  if (k == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (int i = 1; i < k; ++i) r = product(r, a);
  return r;
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& vars) {
  const Ring& ring = *ideal.ring();
  if (vars.empty()) return ideal;
  std::vector<char> drop(static_cast<std::size_t>(ring.nvars()), 0);
  for (int v : vars) {
    if (v < 0 || v >= ring.nvars()) throw InputError("elimination variable out of range");
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> first, rest;
  for (int i = 0; i < ring.nvars(); ++i) (drop[static_cast<std::size_t>(i)] ? first : rest).push_back(i);
  if (rest.empty()) throw InputError("cannot eliminate every variable");
  std::vector<int> arrangement = first;
  arrangement.insert(arrangement.end(), rest.begin(), rest.end());
  std::vector<int> perm(static_cast<std::size_t>(ring.nvars()));
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t k = 0; k < arrangement.size(); ++k) {
    perm[static_cast<std::size_t>(arrangement[k])] = static_cast<int>(k);
    names.push_back(ring.names()[static_cast<std::size_t>(arrangement[k])]);
    weights.push_back(ring.weights()[static_cast<std::size_t>(arrangement[k])]);
  }
  MonomialOrder order;
  std::vector<int> rest_blocks = restricted_blocks(ring, rest);
  if (ring.order().kind() == MonomialOrder::Kind::Lex) {
    order = MonomialOrder::lex();
  } else {
    // Eliminated variables first, split by weight class so each block is uniform.
    std::vector<int> sizes;
    int last = -1;
    for (int v : first) {
      int cls = ring.weights()[static_cast<std::size_t>(v)] == 0 ? 0 : 1;
      if (cls != last) {
        sizes.push_back(0);
        last = cls;
      }
      ++sizes.back();
    }
    sizes.insert(sizes.end(), rest_blocks.begin(), rest_blocks.end());
    order = MonomialOrder::block(sizes);
  }
  auto big = Ring::make(names, ring.field(), order, weights);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(permute(g, big, perm));
  auto gb = buchberger(gens, big);
  std::vector<std::string> small_names(names.begin() + static_cast<std::ptrdiff_t>(first.size()), names.end());
  std::vector<int> small_weights(weights.begin() + static_cast<std::ptrdiff_t>(first.size()), weights.end());
  MonomialOrder small_order =
      ring.order().kind() == MonomialOrder::Kind::Lex ? MonomialOrder::lex() : order_from_blocks(rest_blocks);
  auto small = Ring::make(small_names, ring.field(), small_order, small_weights);
  std::vector<int> back(static_cast<std::size_t>(ring.nvars()), 0);
  std::vector<Poly> images;
  for (std::size_t k = 0; k < arrangement.size(); ++k)
    images.push_back(k < first.size() ? Poly(small) : Poly::variable(small, static_cast<int>(k - first.size())));
  std::vector<Poly> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t k = 0; k < first.size() && free; ++k)
        if (t.mono[static_cast<int>(k)] != 0) free = false;
      if (!free) break;
    }
    if (free) out.push_back(g.substitute(small, images));
  }
  return Ideal(small, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  const Ring& ring = *a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
  std::vector<std::string> names{"_v"};
  std::vector<int> weights{0};
  for (int i = 0; i < ring.nvars(); ++i) {
    names.push_back(ring.names()[static_cast<std::size_t>(i)]);
    weights.push_back(ring.weights()[static_cast<std::size_t>(i)]);
  }
  MonomialOrder order;
  if (ring.order().kind() == MonomialOrder::Kind::Lex) {
    order = MonomialOrder::lex();
  } else {
    auto sizes = block_sizes(ring);
    sizes.insert(sizes.begin(), 1);
    order = MonomialOrder::block(sizes);
  }
  auto big = Ring::make(names, ring.field(), order, weights);
  std::vector<int> perm;
  for (int i = 0; i < ring.nvars(); ++i) perm.push_back(i + 1);
  Poly v = Poly::variable(big, 0);
  Poly one_minus_v = Poly::constant(big, 1) - v;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(v * permute(f, big, perm));
  for (const auto& g : b.generators()) gens.push_back(one_minus_v * permute(g, big, perm));
  Ideal joint(big, std::move(gens));
  Ideal small = eliminate(joint, {0});
  std::vector<Poly> out;
  for (const auto& g : small.generators()) out.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(out));
}

Ideal quotient(const Ideal& a, const Poly& f) {
  if (f.is_zero()) throw InputError("quotient by the zero polynomial");
  if (f.is_constant()) return a;
  Poly g = f.in_ring(a.ring());
  Ideal inter = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Poly> out;
  for (const auto& h : inter.gb().elements()) {
    auto div = divide(h, {g});
    if (!div.remainder.is_zero()) throw InvariantViolation("intersection element not divisible in quotient");
    out.push_back(div.quotients[0]);
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (b.is_zero()) throw InputError("quotient by the zero ideal");
  if (b.is_unit()) return a;
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal q = quotient(a, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal saturate_by_variable(const Ideal& ideal, int var) {
  const Ring& ring = *ideal.ring();
  if (var < 0 || var >= ring.nvars()) throw InputError("variable index out of range");
  if (!ring.standard_graded()) {
    Poly x = Poly::variable(ideal.ring(), var);
    Ideal k = ideal;
    while (true) {
      Ideal next = quotient(k, x);
      if (next == k) return k;
      k = next;
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(ring.nvars()));
  std::vector<std::string> names;
  for (int i = 0, k = 0; i < ring.nvars(); ++i)
    if (i != var) {
      perm[static_cast<std::size_t>(i)] = k++;
      names.push_back(ring.names()[static_cast<std::size_t>(i)]);
    }
  perm[static_cast<std::size_t>(var)] = ring.nvars() - 1;
  names.push_back(ring.names()[static_cast<std::size_t>(var)]);
  auto permuted = Ring::make(names, ring.field());
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(permute(g, permuted, perm));
  auto gb = buchberger(gens, permuted);
  std::vector<int> inverse(static_cast<std::size_t>(ring.nvars()));
  for (int i = 0; i < ring.nvars(); ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  const int last = ring.nvars() - 1;
  std::vector<Poly> out;
  for (const auto& g : gb.elements()) {
    int k = 255;
    for (const auto& t : g.terms()) k = std::min(k, t.mono[last]);
    Poly h = g;
    if (k > 0) {
      std::vector<Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m = t.mono;
        m.set(last, m[last] - k);
        terms.push_back({m, t.coeff});
      }
      h = Poly::from_terms(permuted, std::move(terms));
    }
    out.push_back(permute(h, ideal.ring(), inverse));
  }
  return Ideal(ideal.ring(), std::move(out));
}

namespace {

bool same_hilbert_polynomial(const Ideal& a, const Ideal& b) {
  const auto& ha = a.hilbert();
  const auto& hb = b.hilbert();
  return ha.polynomial == hb.polynomial;
}

bool is_maximal_ideal(const Ideal& j) {
  const Ring& ring = *j.ring();
  for (int i = 0; i < ring.nvars(); ++i)
    if (ring.weights()[static_cast<std::size_t>(i)] > 0 && !j.contains(Poly::variable(j.ring(), i))) return false;
  for (const auto& g : j.generators())
    if (g.is_constant()) return false;
  return true;
}

Ideal iterate_quotient(const Ideal& ideal, const Ideal& by) {
  Ideal k = ideal;
  while (true) {
    Ideal next = quotient(k, by);
    if (next == k) return k;
    k = next;
  }
}

}  // namespace

Ideal saturate(const Ideal& ideal) {
  const Ring& ring = *ideal.ring();
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  if (ring.standard_graded()) {
    // I : x_i^inf contains I, is saturated, and has the Hilbert polynomial
    // of I exactly when it equals the saturation.
    for (int i = 0; i < ring.nvars(); ++i) {
      Ideal k = saturate_by_variable(ideal, i);
      if (same_hilbert_polynomial(k, ideal)) return k;
    }
  }
  return iterate_quotient(ideal, Ideal::maximal(ideal.ring()));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  check_same(ideal, by);
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  if (ideal.ring()->standard_graded() && is_maximal_ideal(by)) return saturate(ideal);
  if (by.generators().size() == 1 && by.generators()[0].size() == 1) {
    const Poly& g = by.generators()[0];
    // Monomial: saturate one variable at a time.
    Ideal k = ideal;
    for (int i = 0; i < g.ring()->nvars(); ++i)
      if (g.leading_monomial()[i] > 0) k = saturate_by_variable(k, i);
    return k;
  }
  return iterate_quotient(ideal, by);
}

bool is_saturated(const Ideal& ideal) {
  const Ring& ring = *ideal.ring();
  if (ideal.is_zero() || ideal.is_unit()) return true;
  if (ring.standard_graded()) {
    // A variable that is a non-zero-divisor modulo I certifies saturation.
    for (int i = 0; i < ring.nvars(); ++i) {
      Ideal k = saturate_by_variable(ideal, i);
      if (ideal.contains(k)) return true;
      if (same_hilbert_polynomial(k, ideal)) return false;
    }
  }
  return saturate(ideal) == ideal;
}

Ideal initial_ideal(const Ideal& ideal) {
  std::vector<Poly> gens;
  for (const auto& m : ideal.gb().leading_monomials()) gens.push_back(Poly::monomial(ideal.ring(), m));
  return Ideal(ideal.ring(), std::move(gens));
}

std::vector<Poly> minimal_generators(const Ideal& ideal) {
  std::vector<Poly> gens = ideal.sorted_generators();
  std::vector<Poly> accepted;
  std::size_t k = 0;
  while (k < gens.size()) {
    int d = gens[k].degree();
    std::vector<Poly> batch;
    while (k < gens.size() && gens[k].degree() == d) batch.push_back(gens[k++]);
    BuchbergerOptions opts;
    opts.degree_limit = d;
    std::vector<Poly> reduced;
    if (accepted.empty()) {
      reduced = batch;
    } else {
      auto gb = buchberger(accepted, opts);
      for (const auto& g : batch) reduced.push_back(gb.reduce(g));
    }
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (const auto& r : reduced)
      for (const auto& t : r.terms()) index.emplace(t.mono, static_cast<int>(index.size()));
    EchelonBasis span(static_cast<int>(index.size()), ideal.ring()->field());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      Vec v(index.size());
      for (const auto& t : reduced[i].terms()) v[static_cast<std::size_t>(index[t.mono])] = t.coeff;
      if (span.insert(std::move(v))) accepted.push_back(batch[i]);
    }
  }
  return accepted;
}

std::vector<Poly> random_linear_forms(const RingPtr& ring, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Term> terms;
    for (int i = 0; i < ring->nvars(); ++i) {
      long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) terms.push_back({Monomial::variable(ring->nvars(), i), Scalar(c)});
    }
    Poly l = Poly::from_terms(ring, std::move(terms));
    if (!l.is_zero()) out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::int64_t> h_vector(const Ideal& ideal, std::uint64_t seed) {
  if (ideal.hilbert().dimension != 2) throw InputError("h-vector needs a curve (Krull dimension 2)");
  for (int attempt = 0; attempt <= 5; ++attempt) {
    auto forms = random_linear_forms(ideal.ring(), seed + static_cast<std::uint64_t>(attempt), 2);
    Ideal artinian = sum(ideal, Ideal(ideal.ring(), forms));
    const auto& h = artinian.hilbert();
    if (h.dimension != 0) continue;
    std::vector<std::int64_t> out = h.numerator;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }
  throw InvariantViolation("no Artinian reduction found after 6 seeds");
}

namespace {

void enumerate_monomials(int var, int remaining, Monomial& cur, const std::vector<Monomial>* leads,
                         std::vector<Monomial>& out) {
  const int n = cur.nvars();
  if (var == n - 1) {
    cur.set(var, remaining);
    bool ok = true;
    if (leads)
      for (const auto& l : *leads)
        if (l.divides(cur)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    if (leads && e > 0) {
      // Prune once the partial monomial is already in the initial ideal.
      bool dead = false;
      for (const auto& l : *leads)
        if (l.divides(cur)) {
          dead = true;
          break;
        }
      if (dead) continue;
    }
    enumerate_monomials(var + 1, remaining - e, cur, leads, out);
  }
  cur.set(var, 0);
}

std::vector<Monomial> enumerate(const RingPtr& ring, int d, const std::vector<Monomial>* leads) {
  if (!ring->standard_graded()) throw InputError("monomial enumeration needs a standard graded ring");
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(ring->nvars());
  if (ring->nvars() == 0) return out;
  enumerate_monomials(0, d, cur, leads, out);
  const auto& ord = ring->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) { return enumerate(ring, d, nullptr); }

std::vector<Monomial> standard_monomials(const Ideal& ideal, int d) {
  auto leads = ideal.gb().leading_monomials();
  return enumerate(ideal.ring(), d, &leads);
}

QuotientPiece::QuotientPiece(const Ideal& ideal, int d) : ideal_(ideal), degree_(d), basis_(standard_monomials(ideal, d)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
}

Vec QuotientPiece::coordinates(const Poly& f) const { return coordinates_reduced(ideal_.gb().reduce(f)); }

Vec QuotientPiece::coordinates_reduced(const Poly& f) const {
  Vec v(basis_.size());
  for (const auto& t : f.terms()) {
    auto it = index_.find(t.mono);
    if (it == index_.end()) throw InvariantViolation("term outside the standard basis of degree " + std::to_string(degree_));
    v[static_cast<std::size_t>(it->second)] = t.coeff;
  }
  return v;
}

Poly QuotientPiece::element(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back({basis_[i], v[i]});
  return Poly::from_terms(ideal_.ring(), std::move(terms));
}

}  // namespace ferrand
