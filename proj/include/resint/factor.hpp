#pragma once

#include <optional>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/rational.hpp"
#include "resint/univariate.hpp"

namespace resint {

struct RationalRoot {
  Rational value;
  int multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Every rational root with its multiplicity, increasing. Throws on zero input.
std::vector<RationalRoot> rational_roots(const QPoly& p);
std::vector<RationalRoot> rational_roots(const UniPoly& p);

/// q with q*q = p and positive leading coefficient, or nullopt (not a square).
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);
std::optional<QPoly> poly_sqrt(const QPoly& p);
std::optional<UniPoly> poly_sqrt(const UniPoly& p);

enum class FactorStatus {
  Irreducible,      // proven irreducible over Q
  NotFurtherSplit,  // a true divisor, but the search budget ran out
};

struct Factor {
  QPoly poly;  // primitive integer polynomial, positive leading coefficient
  int multiplicity;
  FactorStatus status;
};

struct Factorization {
  Rational unit;
  std::vector<Factor> factors;  // sorted by degree, then coefficients

  QPoly expand() const;
  bool fully_certified() const;
};

/// Squarefree decomposition, then rational roots, then Kronecker search for
/// factors of degree <= degree_budget with numeric-root recombination as a
/// fallback when Kronecker's divisor sets are too large.
Factorization factor_uni_bounded(const QPoly& p, int degree_budget = 6);

}  // namespace resint
