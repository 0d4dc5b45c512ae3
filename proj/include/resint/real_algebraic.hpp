#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/rational.hpp"
#include "resint/univariate.hpp"

namespace resint {

/// Closed rational interval [lo, hi].
struct IntervalQ {
  Rational lo;
  Rational hi;

  IntervalQ() = default;
  IntervalQ(Rational lo_, Rational hi_);
  static IntervalQ point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return contains(Rational(0)); }
  bool is_point() const { return lo == hi; }
  /// -1 or 1 when the whole interval has that sign, 0 otherwise.
  int strict_sign() const;
  std::string str() const;

  friend bool operator==(const IntervalQ&, const IntervalQ&) = default;
};

IntervalQ operator+(const IntervalQ& a, const IntervalQ& b);
IntervalQ operator-(const IntervalQ& a, const IntervalQ& b);
IntervalQ operator-(const IntervalQ& a);
IntervalQ operator*(const IntervalQ& a, const IntervalQ& b);
IntervalQ operator*(const Rational& c, const IntervalQ& a);
IntervalQ pow(const IntervalQ& a, unsigned e);
bool overlaps(const IntervalQ& a, const IntervalQ& b);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& squarefree);
  int variations(const Rational& x) const;
  /// Distinct roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;
  const QPoly& base() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

/// A real root of a squarefree primitive integer polynomial, pinned down by
/// an isolating interval. A degenerate interval means the root is that
/// rational number; otherwise the endpoints are never roots.
class RealAlgebraic {
 public:
  /// Validates that `isolating` holds exactly one root of squarefree_part(poly).
  RealAlgebraic(const QPoly& poly, IntervalQ isolating);
  RealAlgebraic(const Rational& value);  // NOLINT(google-explicit-constructor)

  const QPoly& minpoly() const { return minpoly_; }
  const IntervalQ& interval() const { return interval_; }
  bool is_rational() const { return interval_.is_point() || minpoly_.degree() == 1; }
  /// Exact value when is_rational().
  std::optional<Rational> rational_value() const;
  int sign() const;
  double to_double() const;

  /// One bisection step; the width at least halves.
  RealAlgebraic bisected() const;
  /// Bisects until the width is at most `width`.
  RealAlgebraic refined(const Rational& width) const;
  std::string str() const;

 private:
  struct Trusted {};
  RealAlgebraic(QPoly poly, IntervalQ isolating, Trusted);
  QPoly minpoly_;
  IntervalQ interval_;
};

/// All real roots of p in increasing order; p need not be squarefree.
std::vector<RealAlgebraic> sturm_isolate(const QPoly& p);
RealAlgebraic refine(const RealAlgebraic& r, const Rational& width);
/// Exact equality of two real algebraic numbers.
bool same_value(const RealAlgebraic& a, const RealAlgebraic& b);

using RealPoint = std::map<std::string, RealAlgebraic>;

/// Enclosure of q at the point with width at most `width`; coordinates are
/// refined as needed. Every used variable of q must be assigned.
IntervalQ eval_interval(const MultiPoly& q, const RealPoint& point, const Rational& width);
/// Same, evaluating on the given coordinate intervals without refinement.
IntervalQ eval_on_box(const MultiPoly& q, const std::map<std::string, IntervalQ>& box);
/// Sign of q at the point once its enclosure excludes zero; nullopt when the
/// enclosure still contains zero at width `min_width`.
std::optional<int> sign_at(const MultiPoly& q, const RealPoint& point,
                           const Rational& min_width = Rational(Integer(1), Integer(1) << 200));

/// Bound B with every complex root of p in |z| < B (Cauchy).
Rational cauchy_bound(const QPoly& p);

}  // namespace resint
