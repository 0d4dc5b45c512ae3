#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resint/algebraic_point.hpp"
#include "resint/rational_map.hpp"

namespace resint {

struct PlanarElimination {
  /// Res over the first variable: a polynomial in the second (and parameters).
  MultiPoly eliminant_last;
  /// Res over the second variable: a polynomial in the first (and parameters).
  MultiPoly eliminant_first;
  bool degenerate = false;  // some eliminant vanishes identically
  std::string diagnostic;
  /// Certified real fixed points, parameter-free systems only.
  std::vector<AlgebraicPoint> real_fixed_points;
  /// Candidates that could not be certified either way.
  std::vector<std::string> unresolved;
};

/// Two-variable elimination with exact back-substitution of every real
/// candidate into S_i and Q_i.
PlanarElimination eliminate_fixed_points(const FixedPointSystem& sys);

/// Rational fixed points that are fixed for every parameter value: found on a
/// random specialization, then confirmed symbolically (S_i identically zero,
/// Q_i not identically zero).
std::vector<std::vector<Rational>> parameter_free_rational_fixed_points(const RationalMap& f,
                                                                        std::uint64_t seed = 1);

/// Real fixed points of a parameter-free map of any dimension whose fixed
/// points are isolated: planar maps use eliminate_fixed_points; higher
/// dimensions only report rational fixed points.
std::vector<AlgebraicPoint> real_fixed_points(const RationalMap& f);

}  // namespace resint
