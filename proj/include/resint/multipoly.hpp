#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resint/rational.hpp"

namespace resint {

/// One exponent per declared variable of the owning polynomial.
using Exponents = std::vector<std::uint32_t>;

/// Graded-lex order, larger monomials first: compares total degree, then
/// exponents lexicographically in the declared variable order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q.
///
/// Every polynomial carries its own ordered variable list. Binary operations
/// align operands by variable name: the result uses the left operand's
/// variables followed by any new ones from the right operand. Terms are kept
/// in graded-lex order and zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT

  static MultiPoly variable(const std::string& name);
  static MultiPoly variable(const std::string& name, std::vector<std::string> variables);
  static MultiPoly term(const Rational& coefficient, Exponents exponents,
                        std::vector<std::string> variables);
  /// Dense coefficient list in `var` (index = power) back to a polynomial.
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coefficients,
                                     const std::string& var);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws InvalidInput when the polynomial is not constant.
  Rational constant_value() const;

  std::optional<std::size_t> index_of(std::string_view var) const;
  bool depends_on(std::string_view var) const;
  /// Variables that actually occur with a positive exponent, in declared order.
  std::vector<std::string> used_variables() const;
  /// -1 for the zero polynomial; 0 when `var` does not occur.
  int degree(std::string_view var) const;
  int total_degree() const;
  const Rational& leading_coefficient() const;
  const Exponents& leading_exponents() const;

  /// Re-embeds into the given variable list; every used variable must be present.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;
  /// Drops variables that do not occur.
  MultiPoly compacted() const;

  /// Coefficients as polynomials in the remaining variables; index = power of `var`.
  std::vector<MultiPoly> coefficients(std::string_view var) const;
  MultiPoly coefficient(std::string_view var, int power) const;
  MultiPoly leading_coefficient(std::string_view var) const;

  MultiPoly derivative(std::string_view var) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly evaluate(std::string_view var, const Rational& value) const;
  /// Full evaluation; every used variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;
  /// p / content, signed so that the graded-lex leading coefficient is positive.
  MultiPoly primitive() const;
  MultiPoly monic() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable form using the map grammar, e.g. "-x^2*y + 3/2*x - 1".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// Union of two variable lists: `a` in order, then new names from `b`.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b in `var`: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace resint
