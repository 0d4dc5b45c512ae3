#pragma once

#include <vector>

#include "resint/rational.hpp"

namespace resint {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Basis of {k in Z^rows : k * A = 0} for an integer matrix A (rows x cols).
IntMatrix integer_left_kernel(const IntMatrix& a);
/// Basis of the Z-span of the given vectors (zero vectors dropped).
IntMatrix lattice_basis(const IntMatrix& generators);
/// LLL-reduced basis (delta = 3/4) of linearly independent rows.
IntMatrix lll_reduce(IntMatrix basis);
/// Gram determinant of the rows (squared covolume when they are independent).
Integer gram_determinant(const IntMatrix& rows);
/// Whether k lies in the Z-span of the independent rows of `basis`.
bool lattice_contains(const IntMatrix& basis, const IntVector& k);
/// Rank over Q.
std::size_t rank_of(const IntMatrix& m);

}  // namespace resint
