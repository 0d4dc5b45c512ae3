#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resint/rational_function.hpp"
#include "resint/rational_map.hpp"

namespace resint {

struct IntegralCheck {
  bool holds = false;
  /// Num(G o f) Den(H o f) H - G Num(H o f) Den(G o f) for R = G/H; zero iff R o f = R.
  MultiPoly residual;
};

/// Throws InvalidInput if R uses a variable outside the map's universe.
IntegralCheck verify_first_integral(const RationalMap& f, const RationalFunction& r);

enum class Independence { Independent, Dependent, ProbablyDependent };

std::string to_string(Independence v);

struct IndependenceReport {
  Independence verdict = Independence::ProbablyDependent;
  /// Point (state variables then parameters) where a maximal minor is nonzero.
  std::map<std::string, Rational> witness;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::string method;  // "random point" | "symbolic minors" | "too many candidates"
};

/// Rank of the Jacobian of the candidates with respect to `state_vars`.
/// Random rational points first; symbolic maximal minors for up to three candidates.
IndependenceReport functional_independence(const std::vector<std::string>& state_vars,
                                           const std::vector<RationalFunction>& integrals,
                                           const std::vector<std::string>& params = {}, std::uint64_t seed = 1,
                                           int retries = 20);

struct OrbitCheck {
  double max_deviation = 0;
  std::optional<Rational> exact_max_deviation;  // exact runs only
  unsigned steps_done = 0;
  std::optional<unsigned> pole_step;  // first step whose image or value hit a pole
  std::string message;
};

/// max_k |R(x_k) - R(x_0)| along the orbit in double precision.
OrbitCheck orbit_invariance_numeric(const RationalMap& f, const RationalFunction& r, const std::vector<Rational>& start,
                                    unsigned steps, const std::map<std::string, Rational>& params = {});
/// Same in exact rational arithmetic.
OrbitCheck orbit_invariance_exact(const RationalMap& f, const RationalFunction& r, const std::vector<Rational>& start,
                                  unsigned steps, const std::map<std::string, Rational>& params = {});

/// Random rational point with numerators and denominators bounded by 1000.
std::map<std::string, Rational> random_point(const std::vector<std::string>& names, std::uint64_t& state);

}  // namespace resint
