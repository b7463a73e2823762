// Brute-force reference computations used by the tests. Nothing here goes
// through Groebner bases.
#pragma once

#include "ferrand/ideal.hpp"
#include "ferrand/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ferrand::Monomial;
using ferrand::Poly;
using ferrand::RingPtr;
using ferrand::Scalar;
using Exps = std::vector<int>;

inline std::vector<Exps> exponent_vectors(int nvars, int d) {
  std::vector<Exps> out;
  Exps e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline int dense_rank(std::vector<std::vector<Scalar>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Scalar f = m[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

// dim (I)_d for I generated by homogeneous `gens`, via the span of all
// degree-d multiples.
inline std::int64_t ideal_piece_dim(const RingPtr& ring, const std::vector<Poly>& gens, int d) {
  const int n = ring->nvars();
  auto basis = exponent_vectors(n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = d - *g.homogeneous_degree();
    if (e < 0) continue;
    for (const auto& m : exponent_vectors(n, e)) {
      std::vector<Scalar> row(basis.size());
      for (const auto& t : g.terms()) {
        Exps x = t.mono.exponents();
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i)];
        row[index.at(x)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return dense_rank(std::move(rows));
}

inline std::int64_t quotient_dim(const RingPtr& ring, const std::vector<Poly>& gens, int d) {
  return static_cast<std::int64_t>(exponent_vectors(ring->nvars(), d).size()) - ideal_piece_dim(ring, gens, d);
}

// Monomial ideals as sets of exponent vectors.
using MonoIdeal = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MonoIdeal minimalize(MonoIdeal gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonoIdeal out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline MonoIdeal intersect(const MonoIdeal& a, const MonoIdeal& b) {
  MonoIdeal out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exps l(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) l[i] = std::max(x[i], y[i]);
      out.push_back(l);
    }
  return minimalize(out);
}

// I : m for a monomial m.
inline MonoIdeal quotient(const MonoIdeal& a, const Exps& m) {
  MonoIdeal out;
  for (const auto& x : a) {
    Exps q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = std::max(0, x[i] - m[i]);
    out.push_back(q);
  }
  return minimalize(out);
}

// I : J for monomial J, as the intersection of the quotients by its generators.
inline MonoIdeal quotient(const MonoIdeal& a, const MonoIdeal& b) {
  MonoIdeal out = quotient(a, b.front());
  for (std::size_t i = 1; i < b.size(); ++i) out = intersect(out, quotient(a, b[i]));
  return out;
}

// I : J^infinity by iterating I : J until it stabilizes.
inline MonoIdeal saturate(const MonoIdeal& a, const MonoIdeal& b) {
  MonoIdeal cur = minimalize(a);
  while (true) {
    MonoIdeal next = quotient(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
}

inline MonoIdeal maximal(int nvars) {
  MonoIdeal out;
  for (int i = 0; i < nvars; ++i) {
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(e);
  }
  return out;
}

inline ferrand::Ideal to_ideal(const RingPtr& ring, const MonoIdeal& gens) {
  std::vector<Poly> polys;
  for (const auto& e : gens) polys.push_back(Poly::monomial(ring, Monomial::from_exponents(e)));
  return ferrand::Ideal(ring, polys);
}

// Minimal monomial generators of a library ideal that is known to be monomial.
inline MonoIdeal from_ideal(const ferrand::Ideal& ideal) {
  MonoIdeal out;
  for (const auto& g : ideal.gb().elements()) {
    if (g.size() != 1) throw std::runtime_error("not a monomial ideal");
    out.push_back(g.leading_monomial().exponents());
  }
  return minimalize(out);
}

inline MonoIdeal random_monomial_ideal(std::mt19937_64& rng, int nvars, int max_deg, int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens), deg(1, max_deg);
  MonoIdeal out;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    auto all = exponent_vectors(nvars, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    out.push_back(all[pick(rng)]);
  }
  return minimalize(out);
}

// Homogeneous polynomial of degree d with a few random terms and small
// coefficients (never zero).
inline Poly random_form(const RingPtr& ring, int d, std::mt19937_64& rng, int terms = 3) {
  auto all = exponent_vectors(ring->nvars(), d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (true) {
    Poly f(ring);
    for (int i = 0; i < terms; ++i) {
      int c = coeff(rng);
      if (c != 0) f += Poly::monomial(ring, Monomial::from_exponents(all[pick(rng)]), Scalar(c));
    }
    if (!f.is_zero()) return f;
  }
}

inline std::vector<Poly> random_homogeneous_ideal(const RingPtr& ring, std::mt19937_64& rng, int max_gens = 4,
                                                  int max_deg = 3) {
  std::uniform_int_distribution<int> count(1, max_gens), deg(1, max_deg);
  std::vector<Poly> out;
  int k = count(rng);
  for (int i = 0; i < k; ++i) out.push_back(random_form(ring, deg(rng), rng));
  return out;
}

// Product of two matrices of polynomials; true when it vanishes.
inline bool product_vanishes(const std::vector<std::vector<Poly>>& a, const std::vector<std::vector<Poly>>& b,
                             const RingPtr& ring) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
      Poly s(ring);
      for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace oracle
