#pragma once

#include "ferrand/ideal.hpp"
#include "ferrand/module.hpp"

#include <cstdint>
#include <string>
#include <map>
#include <vector>

namespace ferrand {

/// Generators of the kernel of M. The result is a map into M's source whose
/// columns are a minimal generating set of ker(M).
ModuleMap syzygies(const ModuleMap& m);
/// Kernel of M viewed over R/I: columns are minimal generators of
/// {v : M v in I * target}, computed over R and reduced modulo I.
ModuleMap syzygies_over_quotient(const ModuleMap& m, const Ideal& ideal);
/// Whether every column of `gens` lies in the submodule spanned by the
/// columns of `module_gens` (both in the same free module), modulo I * F
/// when an ideal is given.
bool submodule_contains(const ModuleMap& module_gens, const ModuleMap& gens, const Ideal* ideal = nullptr);

/// Schreyer resolution of R/I from a reduced Groebner basis (not minimal).
FreeResolution schreyer_resolution(const Ideal& ideal);
/// Removes unit entries, pivoting on the lowest row then lowest column.
FreeResolution minimalize(const FreeResolution& res);
/// Minimal free resolution of R/I.
FreeResolution free_resolution(const Ideal& ideal);

struct ExactnessReport {
  bool compositions_zero = false;
  bool hilbert_series_match = false;
  bool ok() const { return compositions_zero && hilbert_series_match; }
};
/// Composition-zero check plus the identity sum_i (-1)^i sum_j beta_ij t^j =
/// Hilbert series numerator of R/I.
ExactnessReport certify(const FreeResolution& res, const Ideal& ideal);

struct RncBettiReport {
  int r = 0, n = 0;
  std::vector<GradedFreeModule> computed;  // F_1 .. F_L
  std::vector<GradedFreeModule> expected;
  bool ok = false;
  std::string details;
};
/// Compares the minimal resolution of the rational normal curve ideal with
/// the Eagon-Northcott / Koszul mapping-cone prediction.
RncBettiReport betti_check_rnc(int r, int n);
/// Expected twists of F_i for the rational normal curve, i >= 1.
GradedFreeModule expected_rnc_module(int r, int n, int i);

/// Projective dimension of R/I equals its codimension. Curve input only.
bool is_acm(const Ideal& ideal);
/// dim H^1_m(R/I)_j for a saturated ideal I with R/I of dimension 2, i.e.
/// h^1 of the twisted ideal sheaf. Computed by local duality as the
/// cokernel of the transposed last map of a minimal resolution. Only
/// non-zero values are stored.
std::map<int, std::int64_t> rao_module(const Ideal& ideal);
std::map<int, std::int64_t> rao_module(const FreeResolution& res);

struct AgReport {
  bool acm = false;
  bool ag = false;
  std::vector<std::int64_t> h_vector;
};
AgReport is_ag(const Ideal& ideal, std::uint64_t seed = 1);

}  // namespace ferrand
