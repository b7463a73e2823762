#pragma once

#include "ferrand/groebner.hpp"
#include "ferrand/linalg.hpp"
#include "ferrand/poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ferrand {

/// Hilbert data of R/I in a standard graded ring, derived from the Hilbert
/// series Q(t)/(1-t)^dimension with Q(1) != 0.
struct HilbertData {
  std::vector<std::int64_t> numerator;  // Q, lowest degree first
  int dimension = 0;                    // Krull dimension of R/I
  std::vector<Scalar> polynomial;       // Hilbert polynomial in d, ascending powers
  int regularity_index = 0;             // h(d) = P(d) for every d >= this
  std::map<int, std::int64_t> values;   // h(d) for 0 <= d <= regularity_index + 3

  std::int64_t value(int d) const;
  Scalar polynomial_at(int d) const;
  /// Degree and genus when the polynomial is linear (dimension 2).
  std::optional<std::int64_t> degree() const;
  std::optional<std::int64_t> genus() const;
  /// Text such as "6*t-2".
  std::string polynomial_string() const;
};

/// Homogeneous ideal with a lazily computed, write-once reduced Groebner
/// basis and Hilbert data. Copies share the caches.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> generators);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);
  static Ideal unit(RingPtr ring);
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  /// Generators sorted by (degree, order).
  std::vector<Poly> sorted_generators() const;

  const GroebnerBasis& gb() const;
  const HilbertData& hilbert() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int k);

/// I intersected with the subring on the remaining variables, returned in
/// that smaller ring.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& vars);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal quotient(const Ideal& a, const Poly& f);
Ideal quotient(const Ideal& a, const Ideal& b);
/// I : x_i^infinity, via a degrevlex basis with x_i last. Standard graded rings only.
Ideal saturate_by_variable(const Ideal& ideal, int var);
/// I : J^infinity.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// Saturation by the irrelevant ideal.
Ideal saturate(const Ideal& ideal);
bool is_saturated(const Ideal& ideal);

/// Monomial ideal of leading monomials of the reduced basis.
Ideal initial_ideal(const Ideal& ideal);
/// Minimal generating set of a homogeneous ideal in a standard graded ring,
/// chosen degree by degree from the given generators.
std::vector<Poly> minimal_generators(const Ideal& ideal);

/// Hilbert series numerator of R/M for a monomial ideal (denominator (1-t)^nvars).
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);
HilbertData hilbert_from_leading(const std::vector<Monomial>& leads, int nvars);
/// dim_K (R/I)_d.
std::int64_t hilbert_function(const Ideal& ideal, int d);

/// Hilbert function of R/(I + <l1, l2>) for two seeded random linear forms
/// with coefficients in -3..3. Requires R/I of dimension 2.
std::vector<std::int64_t> h_vector(const Ideal& ideal, std::uint64_t seed = 1);
/// Two linear forms drawn from the generator used by h_vector.
std::vector<Poly> random_linear_forms(const RingPtr& ring, std::uint64_t seed, int count);

/// Monomials of degree d outside the initial ideal, descending in the ring
/// order. Standard graded rings only.
std::vector<Monomial> standard_monomials(const Ideal& ideal, int d);
/// All monomials of degree d, descending in the ring order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

/// (R/I)_d with the basis of standard monomials.
class QuotientPiece {
 public:
  QuotientPiece(const Ideal& ideal, int d);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Coordinates of the normal form of a degree-d polynomial (or zero).
  Vec coordinates(const Poly& f) const;
  /// Coordinates of a polynomial that is already in normal form.
  Vec coordinates_reduced(const Poly& f) const;
  Poly element(const Vec& v) const;

 private:
  Ideal ideal_;
  int degree_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

/// Binomial coefficient as a 64-bit integer (0 when k < 0 or k > n).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace ferrand
