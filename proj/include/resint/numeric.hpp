#pragma once

#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "resint/rational.hpp"
#include "resint/univariate.hpp"

namespace resint {

/// Fixed 120-digit binary float; fixed precision keeps it free of global state.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                               boost::multiprecision::et_off>;

struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i = 0) : re(std::move(r)), im(std::move(i)) {}

  BigFloat norm() const { return re * re + im * im; }
  BigFloat abs() const { return boost::multiprecision::sqrt(norm()); }
  BigFloat arg() const { return boost::multiprecision::atan2(im, re); }
  BigComplex conj() const { return {re, -im}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigFloat d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

BigFloat to_big(const Rational& r);
BigComplex evaluate(const QPoly& p, const BigComplex& z);

/// All complex roots of p, repeated by multiplicity. Each root is polished
/// against its squarefree factor, so accuracy is close to full precision.
std::vector<BigComplex> complex_roots(const QPoly& p);

}  // namespace resint
