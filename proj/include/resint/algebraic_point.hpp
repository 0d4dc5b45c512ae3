#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/errors.hpp"
#include "resint/multipoly.hpp"
#include "resint/rational_function.hpp"
#include "resint/real_algebraic.hpp"
#include "resint/univariate.hpp"

namespace resint {

/// Raised when an element of Q[t]/(m) turns out to be a zero divisor; carries
/// a proper factor of m that splits it.
class ZeroDivisor : public Error {
 public:
  ZeroDivisor(QPoly factor) : Error("zero divisor in number field"), factor_(std::move(factor)) {}  // NOLINT
  const QPoly& factor() const { return factor_; }

 private:
  QPoly factor_;
};

/// Q(alpha) = Q[t]/(m) together with the chosen real root alpha of m.
class NumberField {
 public:
  /// Rational points use the field Q = Q[t]/(t).
  NumberField();
  NumberField(QPoly modulus, RealAlgebraic generator);

  const QPoly& modulus() const { return modulus_; }
  const RealAlgebraic& generator() const { return generator_; }
  int degree() const { return modulus_.degree(); }

  QPoly reduce(const QPoly& e) const;
  QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
  /// Throws ZeroDivisor (or InvalidInput for 0) when e is not invertible.
  QPoly inverse(const QPoly& e) const;
  /// Minimal-polynomial candidate of e(alpha): squarefree part of its characteristic polynomial.
  QPoly annihilator(const QPoly& e) const;
  /// e(alpha) as an isolated real algebraic number.
  RealAlgebraic real_value(const QPoly& e) const;
  /// Sign of e(alpha), exact.
  int sign(const QPoly& e) const;

 private:
  QPoly modulus_;
  RealAlgebraic generator_;
};

/// A real point whose coordinates all lie in one number field.
struct AlgebraicPoint {
  std::vector<std::string> vars;
  NumberField field;
  std::vector<QPoly> coords;  // coordinate i is coords[i](alpha)

  static AlgebraicPoint rational(std::vector<std::string> vars, const std::vector<Rational>& values);

  bool is_rational() const;
  std::optional<std::vector<Rational>> rational_coords() const;
  RealAlgebraic coordinate(std::size_t i) const;
  RealPoint real_point() const;
  /// p evaluated at the point, as a field element. Variables not in `vars` must not occur.
  QPoly value(const MultiPoly& p) const;
  /// Throws PoleError if the denominator vanishes at the point.
  QPoly value(const RationalFunction& f) const;
  std::string str() const;
};

}  // namespace resint
