#pragma once

#include "ferrand/poly.hpp"

#include <optional>
#include <vector>

namespace ferrand {

struct DivisionResult {
  Poly remainder;
  std::vector<Poly> quotients;  // one per basis element
};

/// Full division of f by an ordered list. The leading reducible term is
/// always reduced by the first basis element whose leading monomial
/// divides it, so the result is deterministic.
DivisionResult divide(const Poly& f, const std::vector<Poly>& basis);
/// Remainder only.
Poly reduce(const Poly& f, const std::vector<Poly>& basis);

struct BuchbergerOptions {
  /// Record each basis element as a combination of the input generators.
  bool track = false;
  /// When non-negative, only pairs and generators up to this weighted
  /// degree are processed (the result is a truncated basis).
  int degree_limit = -1;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Poly> elements, bool reduced,
                std::optional<std::vector<std::vector<Poly>>> transformation = std::nullopt, int degree_limit = -1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }
  /// Truncation degree, or -1 for a complete basis.
  int degree_limit() const { return degree_limit_; }
  /// Row i expresses elements()[i] in terms of the original generators.
  const std::optional<std::vector<std::vector<Poly>>>& transformation() const { return transformation_; }
  std::vector<Monomial> leading_monomials() const;

  DivisionResult divide(const Poly& f) const { return ferrand::divide(f, elements_); }
  Poly reduce(const Poly& f) const { return ferrand::reduce(f, elements_); }
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements_ == b.elements_; }

 private:
  RingPtr ring_;
  std::vector<Poly> elements_;
  bool reduced_ = false;
  std::optional<std::vector<std::vector<Poly>>> transformation_;
  int degree_limit_ = -1;
};

/// Reduced Groebner basis of the ideal generated by `gens` for the order of
/// their ring. Elements are monic and sorted by increasing leading monomial.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const BuchbergerOptions& options = {});
/// Same, after moving the generators to `ring` (same variables, other order).
GroebnerBasis buchberger(const std::vector<Poly>& gens, const RingPtr& ring, const BuchbergerOptions& options = {});

Poly s_polynomial(const Poly& f, const Poly& g);
/// Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& polys);

/// Minimal generators of a monomial ideal, sorted ascending in `order`.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, const MonomialOrder& order);

}  // namespace ferrand
