#pragma once

#include "ferrand/field.hpp"
#include "ferrand/monomial.hpp"
#include "ferrand/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ferrand {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial with terms strictly descending in the ring order and no
/// zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Parses the text grammar: terms joined by + and -, each term a
  /// coefficient, a monomial, or coeff*monomial.
  static Poly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  /// Coefficient of a monomial, zero if absent.
  Scalar coefficient(const Monomial& m) const;

  /// Weighted degree shared by all terms, if any (the zero polynomial has none).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// Largest weighted degree among the terms; -1 for zero.
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Scalar& c) { return f *= c; }
  friend Poly operator*(const Scalar& c, Poly f) { return f *= c; }

  /// this += c * m * g.
  void add_scaled(const Scalar& c, const Monomial& m, const Poly& g);
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(int k) const;

  /// Divides by the leading coefficient.
  Poly monic() const;
  /// Over Q: integer coefficients with gcd 1 and positive leading
  /// coefficient. Over F_p: monic.
  Poly primitive() const;

  /// Evaluates at a point with one scalar per variable.
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Ring homomorphism into `target` sending variable i to images[i].
  Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;
  /// Same polynomial viewed in a ring with identical variables but another
  /// order (terms are re-sorted).
  Poly in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void check_ring(const Poly& g) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Sorts polynomials by (degree, leading monomial) ascending, zeros first.
void sort_by_degree_and_order(std::vector<Poly>& polys);

}  // namespace ferrand
