#pragma once

#include <string>
#include <vector>

#include "resint/algebraic_point.hpp"
#include "resint/lattice.hpp"
#include "resint/numeric.hpp"
#include "resint/rational_map.hpp"
#include "resint/real_algebraic.hpp"

namespace resint {

enum class LatticeStatus { Exact, HeuristicVerified, HeuristicUnverified };

std::string to_string(LatticeStatus s);

/// Basis of the Z-span of {k : mu^k = 1}.
struct ResonanceLattice {
  IntMatrix basis;
  int rank = 0;
  LatticeStatus status = LatticeStatus::Exact;
  int search_bound = 0;  // exponent bound B of a heuristic search, 0 otherwise
  std::string method;
  std::vector<std::string> notes;
};

constexpr int kDefaultExponentBound = 20;

/// Exact lattice for nonzero rational eigenvalues; throws InvalidInput on 0.
ResonanceLattice rank_rational_eigs(const std::vector<Rational>& mu);

/// Lattice of the pair (mu, conj(mu)) with mu^2 - T mu + D = 0 and T^2 < 4D.
/// Throws HypothesisFailure when T^2 - 4D >= 0.
ResonanceLattice rank_conjugate_pair(const Rational& trace, const Rational& det);
ResonanceLattice rank_conjugate_pair(const RealAlgebraic& trace, const RealAlgebraic& det);

/// Index p with v = cos(2 pi j / p), gcd(j, p) = 1, if any.
std::optional<long> cos_root_index(const RealAlgebraic& v);

/// An eigenvalue given by a squarefree defining polynomial and an approximation
/// close enough to single out one of its roots.
struct AlgebraicEigenvalue {
  QPoly poly;
  BigComplex approx;
};

/// Integer-relation search on (log|mu_i|, arg mu_i) with exponents bounded by
/// `bound`; candidates are kept only when mu^k = 1 is certified exactly.
ResonanceLattice rank_heuristic(const std::vector<AlgebraicEigenvalue>& mu, int bound = kDefaultExponentBound);

struct Theorem1Bound {
  int bound = 0;
  ResonanceLattice lattice;
  std::string eigen_structure;  // "rational", "conjugate-pair" or "general"
  std::vector<AlgebraicEigenvalue> eigenvalues;
};

/// Upper bound on the number of functionally independent first integrals from
/// the resonances of Df at a fixed point. f must be parameter-free.
/// Throws HypothesisFailure when Df(fp) is singular.
Theorem1Bound theorem1_bound(const RationalMap& f, const AlgebraicPoint& fp, int bound = kDefaultExponentBound);

}  // namespace resint
