#pragma once

#include <map>
#include <string>
#include <vector>

#include "resint/multipoly.hpp"

namespace resint {

/// num / den over Q, reduced by the gcd taken jointly over every variable;
/// den is primitive with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(MultiPoly(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(MultiPoly(c)) {}  // NOLINT
  /// Throws InvalidInput when den is identically zero.
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool depends_on(std::string_view var) const { return num_.depends_on(var) || den_.depends_on(var); }

  RationalFunction derivative(std::string_view var) const;
  /// Simultaneous substitution of variables by rational functions.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& values) const;
  RationalFunction evaluate(std::string_view var, const Rational& value) const;
  /// Full evaluation; throws PoleError when the denominator vanishes.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// "num" for polynomials, "(num)/(den)" otherwise, in the map grammar.
  std::string str() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws InvalidInput on division by the zero function.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Reduced {};
  RationalFunction(MultiPoly num, MultiPoly den, Reduced);
  MultiPoly num_;
  MultiPoly den_;
};

/// Integer exponent, negative allowed for nonzero bases.
RationalFunction pow(const RationalFunction& f, long e);

/// Simultaneous substitution into a polynomial.
RationalFunction substitute(const MultiPoly& p, const std::map<std::string, RationalFunction>& values);

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

}  // namespace resint
