#pragma once

#include "ferrand/ideal.hpp"

#include <string>
#include <vector>

namespace ferrand {

enum class FamilyKind { GenusMinusOne, GenusZero, GenusOne, GenusThree, Constant };

/// An ideal of K[x,y,z,w][s] (s of weight 0) with curve fibers.
struct FamilyIdeal {
  FamilyKind kind;
  std::string recipe;  // "intersection", "quotient" or "literal"
  Ideal ideal;
};

FamilyKind family_kind_from_name(const std::string& name);
std::string family_name(FamilyKind kind);
/// K[x,y,z,w,s] with s of weight 0 in its own block.
RingPtr family_ring();
FamilyIdeal build_family(FamilyKind kind);
/// Substitutes s = c and saturates.
Ideal fiber(const FamilyIdeal& family, const Scalar& c);

struct FiberRow {
  Scalar parameter;
  std::string hilbert_polynomial;
  std::int64_t genus = 0;
};
struct FlatnessEvidence {
  std::vector<FiberRow> fibers;
  bool constant_hilbert_polynomial = false;
  std::string to_json() const;
};
FlatnessEvidence flatness_evidence(const FamilyIdeal& family, const std::vector<Scalar>& samples);

}  // namespace ferrand
