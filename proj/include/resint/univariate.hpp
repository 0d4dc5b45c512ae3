#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/rational.hpp"

namespace resint {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class QPoly {
 public:
  QPoly() = default;
  /// Coefficients from the constant term upwards; trailing zeros are trimmed.
  explicit QPoly(std::vector<Rational> coefficients);
  QPoly(std::initializer_list<long> coefficients);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int power);
  static QPoly x() { return monomial(Rational(1), 1); }
  /// Throws InvalidInput if `p` uses any variable other than `var`.
  static QPoly from_multi(const MultiPoly& p, std::string_view var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](int k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return evaluate(x).sign(); }
  QPoly derivative() const;
  QPoly monic() const;
  /// Coprime integer coefficients with positive leading coefficient.
  QPoly primitive() const;
  /// Integer coefficients of `primitive()`.
  std::vector<Integer> integer_coefficients() const;
  /// p(-x)
  QPoly reflected() const;
  /// x^deg * p(1/x)
  QPoly reciprocal() const;

  MultiPoly to_multi(const std::string& var) const;
  std::string str(const std::string& var = "x") const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly exact_divide(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& p, unsigned e);
/// p(q(x))
QPoly compose(const QPoly& p, const QPoly& q);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
/// Same root set with every multiplicity reduced to one; primitive.
QPoly squarefree_part(const QPoly& p);
/// Yun's decomposition: (factor, multiplicity) with pairwise coprime primitive factors.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);
/// Determinant-free resultant over Q via the Euclidean remainder sequence.
Rational resultant(const QPoly& a, const QPoly& b);

/// A MultiPoly viewed as a polynomial in one distinguished variable; all other
/// variables act as coefficient symbols.
class UniPoly {
 public:
  UniPoly(MultiPoly poly, std::string var);
  UniPoly(const QPoly& dense, std::string var);

  const MultiPoly& poly() const { return poly_; }
  const std::string& variable() const { return var_; }
  int degree() const { return poly_.degree(var_); }
  bool is_zero() const { return poly_.is_zero(); }
  MultiPoly coefficient(int k) const { return poly_.coefficient(var_, k); }
  MultiPoly leading_coefficient() const { return poly_.leading_coefficient(var_); }
  /// True when no variable other than the distinguished one occurs.
  bool has_rational_coefficients() const;
  /// Throws InvalidInput unless has_rational_coefficients().
  QPoly dense() const;
  std::string str() const { return poly_.str(); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly poly_;
  std::string var_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace resint
