#pragma once

#include "ferrand/binary_form.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/rnc.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ferrand {

/// The surjection O(-r-2)^{r-1} + O(-r)^{n-r} -> O(-r-2+a) on P^1, given by
/// binary forms of degrees a (block1) and a-2 (block2).
class MuMap {
 public:
  /// Validates degrees, the r = n = 2 restriction and surjectivity.
  MuMap(int r, int n, int a, std::vector<BinaryForm> block1, std::vector<BinaryForm> block2);
  /// Entries given as text, block1 then block2 (n - 1 forms in total).
  static MuMap parse(int r, int n, int a, const std::vector<std::string>& entries, Field field = Field::rationals());

  int r() const { return r_; }
  int n() const { return n_; }
  int a() const { return a_; }
  const RingPtr& binary() const { return binary_; }
  const std::vector<BinaryForm>& block1() const { return block1_; }
  const std::vector<BinaryForm>& block2() const { return block2_; }
  /// All entries, block1 then block2.
  std::vector<BinaryForm> entries() const;
  int genus() const { return r_ + 1 - a_; }
  MuMap scaled(const Scalar& c) const;

 private:
  int r_, n_, a_;
  RingPtr binary_;
  std::vector<BinaryForm> block1_, block2_;
};

/// (r-1) x C(r,2) matrix of psi_r over K[t,u].
std::vector<std::vector<BinaryForm>> psi_matrix(int r, const RingPtr& binary);
/// The row mu o (psi + id): C(r,2) entries of degree r-2+a, then block2.
std::vector<BinaryForm> compose_mu_psi(const MuMap& mu);

enum class DoublingAlgorithm { DegreewiseKernel, SyzygyLift };

struct DoublingOptions {
  /// Highest degree examined; negative means 2a + 2r + 4, or the value of
  /// FERRAND_DEGREE_CAP when set.
  int degree_cap = -1;
};

/// A double structure X on the rational normal curve C, I_C^2 in I_X in I_C.
class DoubleCurve {
 public:
  DoubleCurve(RncContext ctx, MuMap mu, Ideal ideal, int last_degree)
      : ctx_(std::move(ctx)), mu_(std::move(mu)), ideal_(std::move(ideal)), last_degree_(last_degree) {}

  const RncContext& ctx() const { return ctx_; }
  const MuMap& mu() const { return mu_; }
  const Ideal& ideal() const { return ideal_; }
  /// Highest degree inspected before the stop conditions held.
  int last_degree() const { return last_degree_; }

 private:
  RncContext ctx_;
  MuMap mu_;
  Ideal ideal_;
  int last_degree_;
};

int effective_degree_cap(const MuMap& mu, const DoublingOptions& options);

/// Builds I_X. The default algorithm computes (I_X)_d degree by degree as
/// the kernel of f -> (normal form mod I_C, eval_mu(f)); the syzygy lift
/// computes generators of the syzygies of mu o (psi + id) over R/I_C and
/// returns I_C^2 + [I_C] M.
DoubleCurve double_ideal(const MuMap& mu, DoublingAlgorithm algorithm = DoublingAlgorithm::DegreewiseKernel,
                         const DoublingOptions& options = {});

/// eval_mu of a polynomial of I_C, computed from division by the generators
/// of I_C in the given order (a permutation of quadrics then linears).
BinaryForm eval_mu(const Poly& f, const MuMap& mu, const RncContext& ctx, const std::vector<int>& divisor_order = {});

/// mu2 = c * mu1 for some non-zero scalar c.
bool mu_equivalence_check(const MuMap& mu1, const MuMap& mu2);

enum class AgKind { Canonical, Elliptic };
/// Canonical type: a = 0, n = r, block1 = constants. Elliptic type:
/// n = 2r - 1, a = r, block1 = 0, block2 = (t^{r-2}, ..., u^{r-2}).
MuMap ag_mu(AgKind kind, int r, const std::vector<Scalar>& constants = {});
/// Seeded constants in -3..3, not all zero.
std::vector<Scalar> random_constants(int count, std::uint64_t seed);
/// Generators of the scroll ideal (2x2 minors of the 2 x (2r-2) matrix).
std::vector<Poly> scroll_ideal_generators(const RncContext& ctx);

/// Double conics in P^3 (r = 2, n = 3): odd genus a = 2b with mu = (u^{2b},
/// t^{2b-2}) (b = 0 uses (1, 0)); even genus a = 2b+1 with mu = (u^{2b+1}, t^{2b-1}).
MuMap odd_conic_mu(int b);
MuMap even_conic_mu(int b);
/// The explicit ideals written with x, y, z, w = x0..x3.
Ideal odd_conic_ideal(int b);
Ideal even_conic_ideal(int b);

/// Seeded random surjective mu with coefficients in -3..3.
MuMap random_mu(int r, int n, int a, std::uint64_t seed, Field field = Field::rationals());

}  // namespace ferrand
