#pragma once

#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include "resint/multipoly.hpp"
#include "resint/rational_map.hpp"
#include "resint/univariate.hpp"

namespace testing {

inline resint::MultiPoly var(const std::string& name) { return resint::MultiPoly::variable(name); }
inline resint::MultiPoly q(long n, long d = 1) { return resint::MultiPoly(resint::Rational(n, d)); }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

#ifdef RESINT_MAPS_DIR
inline resint::RationalMap load_map(const std::string& name) {
  return resint::parse_map(slurp(std::filesystem::path(RESINT_MAPS_DIR) / name));
}
#endif

// Durand-Kerner in double precision; an oracle independent of the library's root finder.
inline std::vector<std::complex<double>> dk_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::pow(std::complex<double>(0.4, 0.9), k);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * x + c[k] / c[n];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      z[i] -= eval(z[i]) / den;
    }
  }
  return z;
}

inline resint::QPoly random_qpoly(std::mt19937_64& rng, int max_degree, int coeff_range = 9) {
  std::uniform_int_distribution<int> deg(1, max_degree), coef(-coeff_range, coeff_range);
  const int d = deg(rng);
  std::vector<resint::Rational> cs;
  for (int k = 0; k <= d; ++k) cs.emplace_back(coef(rng));
  if (cs.back().is_zero()) cs.back() = resint::Rational(1);
  return resint::QPoly(cs);
}

}  // namespace testing
