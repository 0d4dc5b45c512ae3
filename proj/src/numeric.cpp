#include "resint/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "resint/errors.hpp"

namespace resint {

BigFloat to_big(const Rational& r) {
  return BigFloat(r.numerator().get_mpz_t()) / BigFloat(r.denominator().get_mpz_t());
}

namespace {

std::vector<BigFloat> to_big(const QPoly& p) {
  std::vector<BigFloat> out;
  for (const auto& c : p.coefficients()) out.push_back(to_big(c));
  return out;
}

BigComplex horner(const std::vector<BigFloat>& c, const BigComplex& z) {
  BigComplex acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + BigComplex(c[k]);
  return acc;
}

// Aberth-Ehrlich iteration on a squarefree polynomial.
std::vector<BigComplex> aberth(const QPoly& f) {
  const int n = f.degree();
  if (n < 1) return {};
  if (n == 1) return {BigComplex(to_big(-f[0] / f[1]))};
  const auto c = to_big(f);
  const auto dc = to_big(f.derivative());

  // Initial guesses on a circle scaled to the root magnitude, off-axis to
  // avoid symmetric stalls.
  BigFloat radius = 0;
  for (int k = 0; k < n; ++k) {
    const BigFloat ratio = boost::multiprecision::abs(c[k] / c[n]);
    if (ratio == 0) continue;
    radius = std::max(radius, BigFloat(boost::multiprecision::pow(ratio, BigFloat(1) / BigFloat(n - k))));
  }
  if (radius == 0) radius = 1;
  const BigFloat two_pi = 2 * boost::multiprecision::acos(BigFloat(-1));
  std::vector<BigComplex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const BigFloat angle = two_pi * k / n + BigFloat(0.4);
    z[static_cast<std::size_t>(k)] = {radius * boost::multiprecision::cos(angle),
                                      radius * boost::multiprecision::sin(angle)};
  }

  const BigFloat tol = BigFloat("1e-110");
  for (int iter = 0; iter < 5000; ++iter) {
    BigFloat worst = 0;
    for (int i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      const BigComplex pv = horner(c, zi);
      if (pv.norm() == 0) continue;
      const BigComplex ratio = pv / horner(dc, zi);
      BigComplex sum;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum = sum + BigComplex(1) / (zi - z[static_cast<std::size_t>(j)]);
      }
      const BigComplex step = ratio / (BigComplex(1) - ratio * sum);
      zi = zi - step;
      const BigFloat scale = std::max(BigFloat(1), zi.abs());
      worst = std::max(worst, BigFloat(step.abs() / scale));
    }
    if (worst < tol) return z;
    // Rounding noise can stall ill-conditioned inputs above tol.
    if (iter > 300 && worst < BigFloat("1e-60")) return z;
  }
  throw InvariantViolation("complex root iteration did not converge for " + f.str());
}

}  // namespace

BigComplex evaluate(const QPoly& p, const BigComplex& z) { return horner(to_big(p), z); }

std::vector<BigComplex> complex_roots(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<BigComplex> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (const auto& r : aberth(factor)) {
      for (int k = 0; k < mult; ++k) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const BigComplex& a, const BigComplex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

}  // namespace resint
