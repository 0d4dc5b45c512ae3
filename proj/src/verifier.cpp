#include "resint/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "resint/errors.hpp"

namespace resint {

std::string to_string(Independence v) {
  switch (v) {
    case Independence::Independent:
      return "independent";
    case Independence::Dependent:
      return "dependent";
    case Independence::ProbablyDependent:
      return "probably dependent";
  }
  return "?";
}

IntegralCheck verify_first_integral(const RationalMap& f, const RationalFunction& r) {
  const auto names = f.all_variables();
  for (const auto* p : {&r.num(), &r.den()}) {
    for (const auto& v : p->used_variables()) {
      if (std::find(names.begin(), names.end(), v) == names.end()) {
        throw InvalidInput("integral uses " + v + ", which the map does not declare");
      }
    }
  }
  std::map<std::string, RationalFunction> image;
  for (std::size_t i = 0; i < f.dimension(); ++i) image.emplace(f.state_vars[i], f.components[i]);
  const RationalFunction g_f = substitute(r.num(), image);
  const RationalFunction h_f = substitute(r.den(), image);
  IntegralCheck out;
  out.residual = g_f.num() * h_f.den() * r.den() - r.num() * h_f.num() * g_f.den();
  out.holds = out.residual.is_zero();
  return out;
}

std::map<std::string, Rational> random_point(const std::vector<std::string>& names, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  std::map<std::string, Rational> out;
  for (const auto& n : names) out[n] = Rational(Integer(num(rng)), Integer(den(rng)));
  state = rng();
  return out;
}

namespace {

// Rank of a rational matrix by Gaussian elimination.
int rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

// All k-subsets of {0, ..., n-1} in lexicographic order.
void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

IndependenceReport functional_independence(const std::vector<std::string>& state_vars,
                                           const std::vector<RationalFunction>& integrals,
                                           const std::vector<std::string>& params, std::uint64_t seed, int retries) {
  if (integrals.empty()) throw InvalidInput("functional_independence needs at least one candidate");
  IndependenceReport out;
  out.seed = seed;
  const std::size_t m = integrals.size(), n = state_vars.size();
  if (m > n) {
    out.verdict = Independence::Dependent;
    out.method = "more candidates than variables";
    return out;
  }
  Matrix jac(m, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = integrals[i].derivative(state_vars[j]);
  }
  std::vector<std::string> names = state_vars;
  names.insert(names.end(), params.begin(), params.end());
  std::uint64_t state = seed;
  out.method = "random point";
  for (int attempt = 0; attempt < retries; ++attempt) {
    const auto pt = random_point(names, state);
    ++out.attempts;
    std::vector<std::vector<Rational>> values(m, std::vector<Rational>(n));
    bool pole = false;
    for (std::size_t i = 0; i < m && !pole; ++i) {
      for (std::size_t j = 0; j < n && !pole; ++j) {
        try {
          values[i][j] = jac[i][j].evaluate(pt);
        } catch (const PoleError&) {
          pole = true;  // redraw
        }
      }
    }
    if (pole) continue;
    if (rank(values) == static_cast<int>(m)) {
      out.verdict = Independence::Independent;
      out.witness = pt;
      return out;
    }
  }
  if (m > 3) {
    out.verdict = Independence::ProbablyDependent;
    out.method = "too many candidates for symbolic minors";
    return out;
  }
  out.method = "symbolic minors";
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  subsets(n, m, 0, cur, cols);
  for (const auto& c : cols) {
    Matrix minor(m, std::vector<RationalFunction>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) minor[i][j] = jac[i][c[j]];
    }
    if (!determinant(minor).is_zero()) {
      out.verdict = Independence::Independent;
      return out;
    }
  }
  out.verdict = Independence::Dependent;
  return out;
}

namespace {

double to_double(const MultiPoly& p, const std::map<std::string, double>& pt) {
  double acc = 0;
  const auto& vars = p.variables();
  for (const auto& [e, c] : p.terms()) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= std::pow(pt.at(vars[i]), static_cast<double>(e[i]));
    }
    acc += t;
  }
  return acc;
}

double to_double(const RationalFunction& r, const std::map<std::string, double>& pt) {
  const double d = to_double(r.den(), pt);
  if (d == 0) throw PoleError("denominator vanishes in floating point");
  return to_double(r.num(), pt) / d;
}

template <class T, class Eval>
OrbitCheck run_orbit(const RationalMap& f, const RationalFunction& r, std::map<std::string, T> pt, unsigned steps,
                     Eval eval) {
  OrbitCheck out;
  T r0;
  try {
    r0 = eval(r, pt);
  } catch (const PoleError& e) {
    out.pole_step = 0;
    out.message = std::string("integral undefined at the start: ") + e.what();
    return out;
  }
  T worst = r0 - r0;
  for (unsigned k = 1; k <= steps; ++k) {
    std::map<std::string, T> next = pt;
    try {
      for (std::size_t i = 0; i < f.dimension(); ++i) next[f.state_vars[i]] = eval(f.components[i], pt);
      pt = std::move(next);
      T dev = eval(r, pt) - r0;
      if (dev < T(0)) dev = -dev;
      if (dev > worst) worst = dev;
    } catch (const PoleError& e) {
      out.pole_step = k;
      out.message = "orbit reaches a pole at step " + std::to_string(k) + ": " + e.what();
      break;
    }
    out.steps_done = k;
  }
  if constexpr (std::is_same_v<T, Rational>) {
    out.exact_max_deviation = worst;
    out.max_deviation = worst.to_double();
  } else {
    out.max_deviation = worst;
  }
  return out;
}

template <class T>
std::map<std::string, T> start_point(const RationalMap& f, const std::vector<Rational>& start,
                                     const std::map<std::string, Rational>& params) {
  if (start.size() != f.dimension()) throw InvalidInput("start point has the wrong dimension");
  for (const auto& p : f.params) {
    if (!params.count(p)) throw InvalidInput("parameter " + p + " needs a value");
  }
  std::map<std::string, T> pt;
  for (std::size_t i = 0; i < start.size(); ++i) {
    if constexpr (std::is_same_v<T, Rational>) {
      pt[f.state_vars[i]] = start[i];
    } else {
      pt[f.state_vars[i]] = start[i].to_double();
    }
  }
  for (const auto& [k, v] : params) {
    if constexpr (std::is_same_v<T, Rational>) {
      pt[k] = v;
    } else {
      pt[k] = v.to_double();
    }
  }
  return pt;
}

}  // namespace

OrbitCheck orbit_invariance_numeric(const RationalMap& f, const RationalFunction& r, const std::vector<Rational>& start,
                                    unsigned steps, const std::map<std::string, Rational>& params) {
  return run_orbit<double>(f, r, start_point<double>(f, start, params), steps,
                           [](const RationalFunction& g, const std::map<std::string, double>& p) { return to_double(g, p); });
}

OrbitCheck orbit_invariance_exact(const RationalMap& f, const RationalFunction& r, const std::vector<Rational>& start,
                                  unsigned steps, const std::map<std::string, Rational>& params) {
  return run_orbit<Rational>(f, r, start_point<Rational>(f, start, params), steps,
                             [](const RationalFunction& g, const std::map<std::string, Rational>& p) {
                               return g.evaluate(p);
                             });
}

}  // namespace resint
