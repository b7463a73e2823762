#pragma once

#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ferrand {

/// dim (K[t,u]/I_mu)_{rj - r - 2 + a}; at j = 2 the value plus C(r-1, 2) is an
/// upper bound only.
struct RaoFormulaValue {
  std::int64_t value = 0;
  bool bound = false;
};
RaoFormulaValue rao_formula(const MuMap& mu, int j);
/// Degree-j piece of K[t,u]/I for an ideal of binary forms.
std::int64_t binary_quotient_dim(const std::vector<BinaryForm>& forms, int degree);

enum class RaoSource { Formula, Direct, BothAgree, Disagree };
struct RaoProfile {
  std::map<int, std::int64_t> values;     // direct values
  std::map<int, std::int64_t> formula;    // formula values (j = 2: the bound)
  std::map<int, RaoSource> source;
  bool formula_agrees() const;            // off j = 2, and the bound at j = 2
  std::string to_json() const;
};
std::int64_t rao_direct(const DoubleCurve& x, int j, GammaSections* gamma = nullptr);
/// Window from the formula's support, widened until zeros bracket it.
RaoProfile rao_profile(const DoubleCurve& x);
std::pair<int, int> rao_window(const MuMap& mu);

struct TripleClass {
  int degree = 0, genus = 0, n = 0;
  bool ag_admissible = false;
};
std::int64_t genus(const DoubleCurve& x);
TripleClass triple(const DoubleCurve& x);
TripleClass classify_triple(int r, int g, int n);

/// (n+1)(2r+1-g) - 7 + 2g.
std::int64_t family_dimension(int r, int g, int n);
/// (n+1)(r+1) - 4.
std::int64_t rnc_family_dimension(int r, int n);

/// Second difference of the Hilbert function of R/I on 0..last.
std::vector<std::int64_t> second_difference(const Ideal& ideal, int last);

struct AnalyzeReport {
  TripleClass triple;
  std::int64_t genus = 0;
  std::string hilbert_polynomial;
  std::vector<std::int64_t> h_vector;
  RaoProfile rao;
  bool acm = false, ag = false;
  std::int64_t family_dimension = 0;
  std::string to_json() const;
};
AnalyzeReport analyze(const DoubleCurve& x, std::uint64_t seed = 1);

struct TangentReport {
  std::int64_t h0_normal = 0;
  std::int64_t family_dimension = 0;
  std::int64_t conic_component_dimension = 0;  // (n-1)(5-g)+3 for r = 2
  bool smooth_point_evidence = false;
  int t_used = 0;
  std::string to_json() const;
};
TangentReport tangent_vs_family(const DoubleCurve& x);

}  // namespace ferrand
