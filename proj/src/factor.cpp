#include "resint/factor.hpp"

#include <algorithm>
#include <functional>

#include "resint/errors.hpp"
#include "resint/numeric.hpp"
#include "resint/real_algebraic.hpp"

namespace resint {

namespace {

Integer ceil_q(const Rational& r) { return -floor(-r); }

std::vector<Rational> roots_of_squarefree(const QPoly& f) {
  std::vector<Rational> out;
  const QPoly g = f.primitive();
  if (g.degree() == 1) {
    out.push_back(-g[0] / g[1]);
    return out;
  }
  const Rational lead = abs(g.leading());
  const Rational width = Rational(1) / (Rational(4) * lead);
  for (const auto& root : sturm_isolate(g)) {
    if (auto v = root.rational_value()) {
      out.push_back(*v);
      continue;
    }
    // A rational root p/q has q | lead, so lead * root is an integer.
    const auto iv = root.refined(width).interval();
    for (Integer n = ceil_q(iv.lo * lead); Rational(n) <= iv.hi * lead; ++n) {
      const Rational cand = Rational(n) / lead;
      if (g.sign_at(cand) == 0) out.push_back(cand);
    }
  }
  return out;
}

QPoly linear(const Rational& root) { return QPoly({-root, Rational(1)}).primitive(); }

}  // namespace

std::vector<RationalRoot> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  std::vector<RationalRoot> out;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    for (const auto& r : roots_of_squarefree(f)) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<RationalRoot> rational_roots(const UniPoly& p) { return rational_roots(p.dense()); }

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const auto& vars = p.variables();
  Exponents half = p.leading_exponents();
  for (auto& e : half) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  Rational lead;
  if (!exact_sqrt(p.leading_coefficient(), lead)) return std::nullopt;
  MultiPoly q = MultiPoly::term(lead, half, vars);
  MultiPoly rem = p - q * q;
  const Rational twice_lead = Rational(2) * lead;
  while (!rem.is_zero()) {
    const MultiPoly r = rem.with_variables(vars);
    Exponents e = r.leading_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < half[i]) return std::nullopt;
      e[i] -= half[i];
    }
    const MultiPoly t = MultiPoly::term(r.leading_coefficient() / twice_lead, e, vars);
    rem -= (Rational(2) * q + t) * t;
    q += t;
  }
  return q;
}

std::optional<QPoly> poly_sqrt(const QPoly& p) {
  auto r = poly_sqrt(p.to_multi("x"));
  if (!r) return std::nullopt;
  return QPoly::from_multi(*r, "x");
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
  auto r = poly_sqrt(p.poly());
  if (!r) return std::nullopt;
  return UniPoly(*r, p.variable());
}

QPoly Factorization::expand() const {
  QPoly out = QPoly::constant(unit);
  for (const auto& f : factors) out = out * pow(f.poly, static_cast<unsigned>(f.multiplicity));
  return out;
}

bool Factorization::fully_certified() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const Factor& f) { return f.status == FactorStatus::Irreducible; });
}

namespace {

enum class Search { Found, None, GaveUp };

struct SearchResult {
  Search kind;
  QPoly factor;
};

constexpr long kTrialLimit = 100000;
constexpr std::size_t kKroneckerCap = 60000;
constexpr std::size_t kRecombinationCap = 400000;

// Positive divisors of |v| when |v| can be factored by trial division alone.
std::optional<std::vector<Integer>> divisors(const Integer& v) {
  Integer n = abs(v);
  std::vector<std::pair<Integer, int>> primes;
  for (long d = 2; d <= kTrialLimit && Integer(d) * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(Integer(d), e);
  }
  // The cofactor is 1 or a prime unless it could still hide two factors > limit.
  if (n > 1) {
    if (n > Integer(kTrialLimit) * kTrialLimit) return std::nullopt;
    primes.emplace_back(n, 1);
  }
  std::vector<Integer> out{Integer(1)};
  for (const auto& [prime, e] : primes) {
    const std::size_t size = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Candidate g of degree d with g(x_j) | f(x_j), normalized by g(x_0) > 0.
SearchResult kronecker(const QPoly& f, int d) {
  struct Point {
    Integer x;
    std::vector<Integer> values;  // allowed values of g(x)
  };
  std::vector<Point> pool;
  for (long k = 0; pool.size() < static_cast<std::size_t>(3 * d + 3) && k < 60; ++k) {
    const long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    const Rational v = f.evaluate(Rational(x));
    if (v.is_zero()) return {Search::Found, linear(Rational(x))};
    auto divs = divisors(v.numerator());
    if (!divs) continue;
    pool.push_back({Integer(x), std::move(*divs)});
  }
  if (pool.size() < static_cast<std::size_t>(d + 1)) return {Search::GaveUp, {}};
  std::sort(pool.begin(), pool.end(),
            [](const Point& a, const Point& b) { return a.values.size() < b.values.size(); });
  pool.resize(static_cast<std::size_t>(d + 1));
  std::size_t combos = 1;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    const std::size_t mult = pool[j].values.size() * (j == 0 ? 1 : 2);
    if (combos > kKroneckerCap / mult) return {Search::GaveUp, {}};
    combos *= mult;
  }
  for (std::size_t j = 1; j < pool.size(); ++j) {
    auto& vs = pool[j].values;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) vs.push_back(-vs[i]);
  }

  // Lagrange basis on the chosen points.
  std::vector<QPoly> basis;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    QPoly l = QPoly::constant(Rational(1));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i == j) continue;
      const Rational denom = Rational(Integer(pool[j].x - pool[i].x));
      l = l * QPoly({-Rational(pool[i].x) / denom, Rational(1) / denom});
    }
    basis.push_back(std::move(l));
  }

  const Rational lead = f.leading();
  const Rational tail = f[0];
  std::vector<std::size_t> idx(pool.size(), 0);
  while (true) {
    QPoly g;
    for (std::size_t j = 0; j < pool.size(); ++j) g += basis[j] * Rational(pool[j].values[idx[j]]);
    if (g.degree() == d) {
      bool integral = true;
      for (const auto& c : g.coefficients()) integral = integral && c.is_integer();
      if (integral && (lead / g.leading()).is_integer() && (tail.is_zero() || (tail / g[0]).is_integer())) {
        if (divmod(f, g).second.is_zero()) return {Search::Found, g.primitive()};
      }
    }
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == pool[j].values.size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return {Search::None, {}};
}

// Subsets of conjugation classes of the complex roots whose sizes sum to d;
// lead * prod(x - r) must round to an integer polynomial dividing f.
SearchResult recombine(const QPoly& f, const std::vector<BigComplex>& roots, int d) {
  std::vector<std::vector<BigComplex>> classes;
  const BigFloat eps("1e-40");
  for (const auto& r : roots) {
    if (boost::multiprecision::abs(r.im) < eps) {
      classes.push_back({BigComplex(r.re)});
    } else if (r.im > 0) {
      classes.push_back({r, r.conj()});
    }
  }
  const BigFloat lead = to_big(f.leading());
  const BigFloat tol("1e-30");
  std::size_t visited = 0;
  bool gave_up = false;
  std::optional<QPoly> found;
  std::vector<std::size_t> chosen;

  std::function<void(std::size_t, int)> walk = [&](std::size_t start, int remaining) {
    if (found || gave_up) return;
    if (remaining == 0) {
      if (++visited > kRecombinationCap) {
        gave_up = true;
        return;
      }
      BigComplex sum;
      for (auto c : chosen) {
        for (const auto& r : classes[c]) sum = sum + r;
      }
      const BigFloat s = lead * sum.re;
      if (boost::multiprecision::abs(s - boost::multiprecision::round(s)) > tol) return;
      std::vector<BigComplex> prod{BigComplex(lead)};
      for (auto c : chosen) {
        for (const auto& r : classes[c]) {
          std::vector<BigComplex> next(prod.size() + 1);
          for (std::size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] = next[k + 1] + prod[k];
            next[k] = next[k] - prod[k] * r;
          }
          prod = std::move(next);
        }
      }
      std::vector<Rational> coeffs;
      for (const auto& c : prod) {
        const BigFloat rounded = boost::multiprecision::round(c.re);
        if (boost::multiprecision::abs(c.re - rounded) > tol) return;
        Integer z;
        mpfr_get_z(z.get_mpz_t(), rounded.backend().data(), MPFR_RNDN);
        coeffs.emplace_back(z);
      }
      const QPoly g = QPoly(std::move(coeffs)).primitive();
      if (g.degree() == d && divmod(f, g).second.is_zero()) found = g;
      return;
    }
    for (std::size_t c = start; c < classes.size(); ++c) {
      const int size = static_cast<int>(classes[c].size());
      if (size > remaining) continue;
      chosen.push_back(c);
      walk(c + 1, remaining - size);
      chosen.pop_back();
      if (found || gave_up) return;
    }
  };
  walk(0, d);
  if (found) return {Search::Found, *found};
  return {gave_up ? Search::GaveUp : Search::None, {}};
}

// f: primitive, squarefree, without rational roots.
void split(const QPoly& f, int mult, int budget, std::vector<Factor>& out) {
  const int n = f.degree();
  if (n <= 3) {
    out.push_back({f, mult, FactorStatus::Irreducible});
    return;
  }
  bool certified = true;
  std::optional<std::vector<BigComplex>> roots;
  for (int d = 2; d <= n / 2; ++d) {
    if (d > budget) {
      certified = false;
      break;
    }
    SearchResult r = kronecker(f, d);
    if (r.kind == Search::GaveUp) {
      if (!roots) roots = complex_roots(f);
      r = recombine(f, *roots, d);
      // Numeric exhaustion is strong evidence but not a proof.
      if (r.kind != Search::Found) certified = false;
    }
    if (r.kind == Search::Found) {
      split(r.factor, mult, budget, out);
      split(exact_divide(f, r.factor).primitive(), mult, budget, out);
      return;
    }
  }
  out.push_back({f, mult, certified ? FactorStatus::Irreducible : FactorStatus::NotFurtherSplit});
}

}  // namespace

Factorization factor_uni_bounded(const QPoly& p, int degree_budget) {
  if (p.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  Factorization result;
  for (const auto& [f0, mult] : squarefree_decomposition(p)) {
    QPoly f = f0;
    for (const auto& r : roots_of_squarefree(f)) {
      const QPoly l = linear(r);
      result.factors.push_back({l, mult, FactorStatus::Irreducible});
      f = exact_divide(f, l);
    }
    if (f.degree() > 0) split(f.primitive(), mult, degree_budget, result.factors);
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    const auto& ca = a.poly.coefficients();
    const auto& cb = b.poly.coefficients();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
  });
  QPoly product = QPoly::constant(Rational(1));
  for (const auto& f : result.factors) product = product * pow(f.poly, static_cast<unsigned>(f.multiplicity));
  result.unit = p.is_zero() ? Rational(0) : p.leading() / product.leading();
  return result;
}

}  // namespace resint
