#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/rational_function.hpp"

namespace resint {

/// x -> f(x) with components in the state variables and free parameters.
struct RationalMap {
  std::vector<std::string> state_vars;
  std::vector<std::string> params;
  std::vector<RationalFunction> components;

  std::size_t dimension() const { return state_vars.size(); }
  std::vector<std::string> all_variables() const;
  /// Source text in the map grammar; parse_map(render()) reproduces the map.
  std::string render() const;
  /// Substitutes values for some parameters; throws PoleError if a component
  /// denominator vanishes identically.
  RationalMap specialize(const std::map<std::string, Rational>& values) const;

  friend bool operator==(const RationalMap&, const RationalMap&) = default;
};

/// Throws ParseError with line/column on malformed input, undeclared names,
/// component-count mismatch or identically-zero denominators.
RationalMap parse_map(std::string_view text);
/// An expression over the given names, e.g. a candidate first integral.
RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& names);

using Matrix = std::vector<std::vector<RationalFunction>>;

Matrix jacobian(const RationalMap& f);

struct CharPolyData {
  std::string eigen_var;  // name used for the eigenvalue variable in `numerator`
  /// Num(det(mu I - Df)) in state variables, parameters and eigen_var.
  MultiPoly numerator;
  /// Planar maps only: trace T = T1/T2 and determinant D = D1/D2.
  std::optional<RationalFunction> trace;
  std::optional<RationalFunction> det;
};

CharPolyData char_poly(const RationalMap& f);
/// Picks "mu" unless taken, then "mu_", "mu__", ...
std::string fresh_name(const std::vector<std::string>& taken, std::string base = "mu");

/// Determinant of a rational-function matrix via fraction-free elimination
/// after clearing row denominators.
RationalFunction determinant(const Matrix& m);

struct FixedPointSystem {
  std::vector<std::string> state_vars;
  std::vector<MultiPoly> equations;        // S_i = P_i - x_i Q_i
  std::vector<MultiPoly> nondegeneracy;    // Q_i, nonzero at admitted solutions
};

FixedPointSystem fixed_point_system(const RationalMap& f);

/// f o g.
RationalMap compose(const RationalMap& f, const RationalMap& g);
RationalMap iterate_map(const RationalMap& f, unsigned times);
RationalMap identity_map(const std::vector<std::string>& state_vars, const std::vector<std::string>& params = {});
/// Exact evaluation; `params` must assign every parameter. Throws PoleError.
std::vector<Rational> evaluate(const RationalMap& f, const std::vector<Rational>& point,
                               const std::map<std::string, Rational>& params = {});
/// Orbit point_0 .. point_steps.
std::vector<std::vector<Rational>> iterate(const RationalMap& f, const std::vector<Rational>& point,
                                           unsigned steps, const std::map<std::string, Rational>& params = {});

}  // namespace resint
