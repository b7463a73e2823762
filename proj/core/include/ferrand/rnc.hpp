#pragma once

#include "ferrand/binary_form.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/module.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ferrand {

/// Rational normal curve of degree r in the linear space x_{r+1} = ... = x_n = 0
/// of P^n, parametrized by x_i = t^{r-i} u^i.
class RncContext {
 public:
  static RncContext make(int r, int n, Field field = Field::rationals());

  int r() const { return r_; }
  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const RingPtr& binary() const { return binary_; }
  /// (p, q) with 1 <= p < q <= r, lexicographic.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  /// f_pq = x_{p-1} x_q - x_p x_{q-1}, in pair order.
  const std::vector<Poly>& quadrics() const { return quadrics_; }
  /// x_{r+1}, ..., x_n.
  const std::vector<Poly>& linears() const { return linears_; }
  /// Quadrics followed by linears.
  std::vector<Poly> generators() const;
  const Ideal& ideal() const { return ideal_; }
  /// Index of the pair (p, q) in pairs().
  int pair_index(int p, int q) const;

  /// Substitution x_i -> t^{r-i} u^i (i <= r), x_i -> 0 (i > r).
  BinaryForm pullback(const Poly& f) const;
  /// Monomial of R_e whose pullback is t^{re-k} u^k.
  Monomial lift_monomial(int e, int k) const;

 private:
  int r_ = 0, n_ = 0;
  RingPtr ring_, binary_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Poly> quadrics_, linears_;
  std::vector<BinaryForm> images_;
  Ideal ideal_;
};

Ideal rnc_ideal(int r, int n, Field field = Field::rationals());
BinaryForm pullback(const Poly& f, const RncContext& ctx);

/// The 3 x (r-1) catalecticant with rows (x_0..x_{r-2}), (x_1..x_{r-1}), (x_2..x_r).
std::vector<std::vector<Poly>> catalecticant3(const RncContext& ctx);
/// Its 3 x 3 minors, columns i < j < h in lexicographic order.
std::vector<Poly> catalecticant_minors(const RncContext& ctx);

struct SquareSaturationReport {
  int r = 0, n = 0;
  bool equality = false;       // sat(I_C^2) = I_C^2 + I' (+ I_C I_L)
  bool square_saturated = false;
  std::map<int, std::int64_t> excess;  // dim (sat / I_C^2)_d
  bool ok = false;
  std::string details;
};
SquareSaturationReport square_saturation_theorem(int r, int n);

/// Degrevlex initial ideals of I_C and I_C^2 in P^r against the monomial
/// ideals <x_1..x_{r-1}>^2, <x_1..x_{r-1}>^4 + x_0 <x_2..x_{r-1}>^3 +
/// x_r <x_2..x_{r-2}>^3, and the saturation of the latter.
struct InitialIdealReport {
  int r = 0;
  bool linear_part = false;
  bool square = false;
  bool square_saturation = false;
  bool ok() const { return linear_part && square && square_saturation; }
};
InitialIdealReport initial_ideal_check(int r);

struct WahlReport {
  int r = 0, n = 0;
  std::map<int, std::int64_t> h1;  // h^1 of the twisted square ideal sheaf
  bool ok = false;                 // zero off j = 2 and C(r-1, 2) at j = 2
  std::string details;
};
WahlReport wahl_check(int r, int n, int lo, int hi);
WahlReport wahl_check(int r, int n);

/// The Eagon-Northcott map wedge^3 F (x) G^* -> wedge^2 F over R: columns
/// (i < j < h, k = 1, 2), rows the pairs in lexicographic order.
ModuleMap epsilon_matrix(const RncContext& ctx);

struct ConormalReport {
  int r = 0, n = 0;
  bool psi_surjective = false;
  bool composition_zero = false;
  bool explicit_kernel = false;      // the listed degree-2 kernel elements
  int kernel_generators = 0;
  std::vector<int> kernel_twists;    // as sheaf twists, expected -2r-2
  bool image_saturates_to_kernel = false;
  bool ok = false;
  std::string details;
};
ConormalReport conormal_check(int r, int n);

}  // namespace ferrand
