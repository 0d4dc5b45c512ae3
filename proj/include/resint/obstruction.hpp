#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/algebraic_point.hpp"
#include "resint/multipoly.hpp"
#include "resint/rational_map.hpp"

namespace resint {

enum class VerdictKind { Excluded, CandidateParams, CandidateIndices, Inconclusive };

std::string to_string(VerdictKind k);

/// One computed polynomial together with the recipe that produced it from the
/// map or from earlier entries; replay() re-derives each entry through the
/// library and compares.
struct CertificateEntry {
  std::string name;
  /// system | resultant | factor_of | divide | content | primitive |
  /// min_poly_cos | cyclotomic | substitute | solve_linear | at_point |
  /// cos_condition
  std::string op;
  std::vector<std::string> args;
  std::string var;
  long index = 0;
  std::vector<Rational> coords;  // at_point: values of the state variables
  MultiPoly value;
};

using Certificate = std::vector<CertificateEntry>;

struct ObstructionVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::vector<Rational> params;  // CandidateParams: survivors
  std::vector<long> indices;     // CandidateIndices: p with a vanishing resultant
  std::string reason;            // Inconclusive: why
  Certificate certificate;
  std::vector<long> searched_indices;
  std::vector<std::string> notes;
  /// Parametric runs: values before the final filter, and values kept with an
  /// annotation instead of a full decision.
  std::vector<Rational> raw_candidates;
  std::vector<std::pair<Rational, std::string>> flagged;
};

/// Recomputes every entry; returns the name of the first mismatching entry.
std::optional<std::string> replay(const RationalMap& f, const Certificate& cert);

// ---- planar maps ---------------------------------------------------------

/// Exact hypothesis data at a fixed point of a planar map.
struct FixedPointReport {
  AlgebraicPoint point;
  QPoly trace;  // field elements of point.field
  QPoly det;
  int disc_sign = 0;       // sign of T^2 - 4D
  int det_minus_one = 0;   // sign of D - 1
  std::vector<std::string> hypothesis_checks;
  bool hypotheses_hold() const { return disc_sign < 0 && det_minus_one != 0; }
};

FixedPointReport planar_fixed_point_report(const RationalMap& f, const AlgebraicPoint& fp);

struct PlanarOptions {
  bool swap_elimination_order = false;  // eliminate y before x in the refined route
  bool full_route = true;               // also compute U from the unreduced system
  int factor_budget = 6;
};

/// S_1, S_2 and W(x, y, v) = T_1^2 D_2 - 2 (1 + v) T_2^2 D_1.
struct PlanarSystem {
  MultiPoly s1, s2, w;
  std::string x, y, v;
};
PlanarSystem planar_system(const RationalMap& f);

ObstructionVerdict planar_pipeline(const RationalMap& f, const AlgebraicPoint& fp, const PlanarOptions& options = {});

/// T^2 / D must lie in {0, 1, 2, 3, 4} for a rational fixed point.
ObstructionVerdict fast_path_rational_fp(const Rational& trace, const Rational& det);

/// a + b sqrt(s).
struct QuadSurd {
  Rational a;
  Rational b;
  Rational s;
  int sign() const;
  std::string str() const;
};
bool operator==(const QuadSurd& x, const QuadSurd& y);

/// T^2 / D must be one of eight quadratic surds when the fixed point lies in Q(sqrt s).
ObstructionVerdict fast_path_quadratic_fp(const QuadSurd& trace, const QuadSurd& det);
/// The element e of a quadratic field as a + b sqrt(s).
QuadSurd to_quad_surd(const NumberField& field, const QPoly& e);

struct TwoIntegralVerdict {
  bool possible = false;
  std::string reason;
};

/// Necessary condition for two independent first integrals when the
/// characteristic polynomial is mu^2 + b mu + c.
TwoIntegralVerdict two_integral_classification(const Rational& b, const Rational& c);

/// (p, q) with 0 < |p| <= bound, |q| <= bound for which (y, x^p y^q) passes
/// the two-integral test at (1, 1).
std::vector<std::pair<long, long>> power_map_sweep(long bound);

// ---- parameters ----------------------------------------------------------

/// `<param> <op> <rational>` with op one of > >= < <= = !=.
struct ParamConstraint {
  enum class Op { Gt, Ge, Lt, Le, Eq, Ne };
  std::string param;
  Op op = Op::Gt;
  Rational value;
  bool admits(const Rational& x) const;
  std::string str() const;
};

ParamConstraint parse_constraint(const std::string& text);

/// Parametric planar analysis at a fixed point with rational, parameter-free
/// coordinates for a map with exactly one parameter.
ObstructionVerdict planar_parametric(const RationalMap& f, const std::vector<Rational>& fixed_point,
                                     const std::vector<ParamConstraint>& constraints = {});

// ---- n-dimensional maps --------------------------------------------------

struct NdimElimination {
  std::string mu;
  MultiPoly eliminant;                 // P(mu), parameters allowed
  std::vector<long> split_cyclotomic;  // Phi_d(mu) factors removed, with repetition
  MultiPoly content;                   // parameter-only content removed from P
  Certificate certificate;
  std::optional<std::string> failure;  // continuum, no fixed points or collapse
};

NdimElimination ndim_eliminate(const RationalMap& f);

struct NdimOptions {
  std::vector<ParamConstraint> constraints;
  bool confirm_specializations = true;
};

ObstructionVerdict ndim_pipeline(const RationalMap& f, const NdimOptions& options = {});

/// Rational parameter values at which P(mu) shares a root with some Phi_p,
/// filtered by the requirement that every root of P is a root of unity.
ObstructionVerdict parametric_candidates(const MultiPoly& p, const std::string& mu, const std::string& param,
                                         const std::vector<ParamConstraint>& constraints = {});

}  // namespace resint
