#pragma once

#include "ferrand/poly.hpp"

#include <vector>

namespace ferrand {

/// A homogeneous element of K[t,u] (or zero).
using BinaryForm = Poly;

/// Monic gcd of binary forms. Zero entries are ignored; all-zero input
/// raises InputError.
BinaryForm gcd_binary(const std::vector<BinaryForm>& forms);

/// t^i u^j in the given binary ring.
BinaryForm tu_monomial(const RingPtr& ring, int i, int j);

/// Number of monomials of degree d in two variables (0 for d < 0).
inline long binary_dim(int d) { return d < 0 ? 0 : d + 1; }

}  // namespace ferrand
