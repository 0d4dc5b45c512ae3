#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/univariate.hpp"

namespace resint {

/// Sylvester resultant of p and q with respect to `var`. Throws InvalidInput
/// when either input is the zero polynomial.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);
MultiPoly resultant(const UniPoly& p, const UniPoly& q);

/// Determinant by fraction-free (Bareiss) elimination.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Greatest common divisor in Q[vars], primitive with positive leading
/// coefficient; gcd(0, 0) = 0 and gcd(0, q) = primitive(q).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// gcd of the coefficients of p viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& p, std::string_view var);
MultiPoly primitive_part_in(const MultiPoly& p, std::string_view var);

/// Monic gcd of parameter-free univariate polynomials.
UniPoly gcd_uni(const UniPoly& p, const UniPoly& q);
UniPoly squarefree_part(const UniPoly& p);

}  // namespace resint
