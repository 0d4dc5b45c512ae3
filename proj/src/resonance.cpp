#include "resint/resonance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "resint/algebra.hpp"
#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"

namespace resint {

std::string to_string(LatticeStatus s) {
  switch (s) {
    case LatticeStatus::Exact:
      return "Exact";
    case LatticeStatus::HeuristicVerified:
      return "HeuristicVerified";
    case LatticeStatus::HeuristicUnverified:
      return "HeuristicUnverified";
  }
  return "?";
}

namespace {

// Flips each vector so that its first nonzero entry is positive.
void normalize_signs(IntMatrix& basis) {
  for (auto& v : basis) {
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (it != v.end() && *it < 0) {
      for (auto& x : v) x = -x;
    }
  }
}

ResonanceLattice finish(IntMatrix generators, LatticeStatus status, std::string method) {
  ResonanceLattice out;
  IntMatrix basis = lattice_basis(generators);
  basis = lll_reduce(basis);
  normalize_signs(basis);
  std::sort(basis.begin(), basis.end(), [](const IntVector& a, const IntVector& b) {
    auto norm1 = [](const IntVector& v) {
      Integer s = 0;
      for (const auto& x : v) s += abs(x);
      return s;
    };
    const Integer na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>());
  });
  out.rank = static_cast<int>(basis.size());
  out.basis = std::move(basis);
  out.status = status;
  out.method = std::move(method);
  return out;
}

// Pairwise coprime integers > 1 whose products give every input (factor refinement).
std::vector<Integer> coprime_base(const std::vector<Integer>& numbers) {
  std::vector<Integer> base;
  for (const auto& raw : numbers) {
    Integer x = abs(raw);
    if (x <= 1) continue;
    std::vector<Integer> work{x};
    for (const auto& b : base) work.push_back(b);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < work.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
          Integer g;
          mpz_gcd(g.get_mpz_t(), work[i].get_mpz_t(), work[j].get_mpz_t());
          if (g == 1) continue;
          if (work[i] == work[j]) {
            work.erase(work.begin() + static_cast<long>(j));
          } else {
            Integer a = work[i] / g, b = work[j] / g;
            work.erase(work.begin() + static_cast<long>(j));
            work.erase(work.begin() + static_cast<long>(i));
            for (Integer v : {a, b, g}) {
              if (v > 1) work.push_back(v);
            }
          }
          changed = true;
        }
      }
    }
    base = std::move(work);
  }
  std::sort(base.begin(), base.end());
  return base;
}

Integer multiplicity_in(Integer& x, const Integer& b) {
  Integer e = 0;
  while (x % b == 0) {
    x /= b;
    ++e;
  }
  return e;
}

IntVector to_vector(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

IntervalQ divide(const IntervalQ& a, const IntervalQ& b) {
  if (b.contains_zero()) throw InvalidInput("interval division by an interval containing zero");
  std::vector<Rational> q{a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {*std::min_element(q.begin(), q.end()), *std::max_element(q.begin(), q.end())};
}

// The real number rel(a, b, z) = 0 singled out by `enclose`, where rel is in
// the variables "a", "b", "z".
RealAlgebraic combine(const RealAlgebraic& a, const RealAlgebraic& b, const MultiPoly& rel,
                      const std::function<IntervalQ(const IntervalQ&, const IntervalQ&)>& enclose) {
  MultiPoly ann = rel;
  if (auto ra = a.rational_value()) {
    ann = ann.evaluate("a", *ra);
  } else if (ann.depends_on("a")) {
    ann = resultant(a.minpoly().to_multi("a"), ann, "a");
  }
  if (auto rb = b.rational_value()) {
    ann = ann.evaluate("b", *rb);
  } else if (ann.depends_on("b")) {
    ann = resultant(b.minpoly().to_multi("b"), ann, "b");
  }
  if (ann.is_zero()) throw InvariantViolation("annihilating resultant vanished");
  auto roots = sturm_isolate(QPoly::from_multi(ann.compacted(), "z"));
  RealAlgebraic ca = a, cb = b;
  for (int iter = 0; iter < 4000; ++iter) {
    IntervalQ j;
    try {
      j = enclose(ca.interval(), cb.interval());
    } catch (const InvalidInput&) {
      ca = ca.bisected();
      cb = cb.bisected();
      continue;
    }
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (overlaps(roots[i].interval(), j)) hits.push_back(i);
    }
    if (hits.size() == 1) return roots[hits.front()];
    if (hits.empty()) throw InvariantViolation("no root of the annihilator matches the enclosure");
    ca = ca.bisected();
    cb = cb.bisected();
    for (auto i : hits) roots[i] = roots[i].refined(j.width() / Rational(4));
  }
  throw InvariantViolation("root selection did not converge");
}

}  // namespace

ResonanceLattice rank_rational_eigs(const std::vector<Rational>& mu) {
  const std::size_t n = mu.size();
  std::vector<Integer> parts;
  for (const auto& m : mu) {
    if (m.is_zero()) throw InvalidInput("eigenvalue 0: the map is not a local diffeomorphism");
    parts.push_back(m.numerator());
    parts.push_back(m.denominator());
  }
  const auto base = coprime_base(parts);
  const std::size_t cols = base.size() + 1;
  IntMatrix a(n + 1, IntVector(cols, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Integer num = abs(mu[i].numerator()), den = mu[i].denominator();
    for (std::size_t j = 0; j < base.size(); ++j) {
      a[i][j] = multiplicity_in(num, base[j]) - multiplicity_in(den, base[j]);
    }
    if (num != 1 || den != 1) throw InvariantViolation("coprime base does not cover an eigenvalue");
    a[i][cols - 1] = mu[i].sign() < 0 ? 1 : 0;
  }
  // Parity of the number of negative factors, as one constraint modulo 2.
  a[n][cols - 1] = 2;
  IntMatrix kernel = integer_left_kernel(a);
  for (auto& k : kernel) k.resize(n);
  return finish(kernel, LatticeStatus::Exact, "rational");
}

std::optional<long> cos_root_index(const RealAlgebraic& v) {
  if (auto r = v.rational_value()) {
    if (abs(*r) > Rational(1)) return std::nullopt;
    for (long p : indices_with_cos_degree_at_most(1).indices) {
      if (min_poly_cos(p).poly.evaluate(*r).is_zero()) return p;
    }
    return std::nullopt;
  }
  if (v.interval().lo > Rational(1) || v.interval().hi < Rational(-1)) return std::nullopt;
  const QPoly& m = v.minpoly();
  for (long p : indices_with_cos_degree_at_most(m.degree()).indices) {
    const QPoly g = gcd(m, min_poly_cos(p).poly);
    if (g.degree() < 1) continue;
    if (SturmSequence(squarefree_part(g)).count_open(v.interval().lo, v.interval().hi) > 0) return p;
  }
  return std::nullopt;
}

namespace {

ResonanceLattice unit_modulus_pair(const RealAlgebraic& half_trace) {
  // mu conj(mu) = 1, so mu^k1 conj(mu)^k2 = mu^(k1 - k2).
  IntMatrix gens{to_vector({1, 1})};
  std::string method = "conjugate-pair, |mu| = 1";
  if (auto order = cos_root_index(half_trace)) {
    gens.push_back(IntVector{Integer(*order), Integer(0)});
    method += ", mu is a root of unity of order " + std::to_string(*order);
  }
  return finish(gens, LatticeStatus::Exact, method);
}

ResonanceLattice non_unit_pair(const RealAlgebraic& v) {
  // |mu|^(k1 + k2) = 1 forces k2 = -k1, and then (mu / conj(mu))^k1 = 1 where
  // mu / conj(mu) has real part v.
  IntMatrix gens;
  std::string method = "conjugate-pair, |mu| != 1";
  if (auto p = cos_root_index(v)) {
    gens.push_back(IntVector{Integer(*p), Integer(-*p)});
    method += ", mu/conj(mu) has order " + std::to_string(*p);
  }
  return finish(gens, LatticeStatus::Exact, method);
}

}  // namespace

ResonanceLattice rank_conjugate_pair(const Rational& trace, const Rational& det) {
  if (trace * trace - Rational(4) * det >= Rational(0)) {
    throw HypothesisFailure("conjugate pair requires T^2 - 4D < 0, got T = " + trace.str() + ", D = " + det.str());
  }
  if (det == Rational(1)) return unit_modulus_pair(RealAlgebraic(trace / Rational(2)));
  return non_unit_pair(RealAlgebraic(trace * trace / (Rational(2) * det) - Rational(1)));
}

ResonanceLattice rank_conjugate_pair(const RealAlgebraic& trace, const RealAlgebraic& det) {
  if (trace.is_rational() && det.is_rational()) {
    return rank_conjugate_pair(*trace.rational_value(), *det.rational_value());
  }
  const MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b"), z = MultiPoly::variable("z");
  const RealAlgebraic disc = combine(trace, det, z - a * a + Rational(4) * b,
                                     [](const IntervalQ& t, const IntervalQ& d) { return pow(t, 2) - Rational(4) * d; });
  if (disc.sign() >= 0) {
    throw HypothesisFailure("conjugate pair requires T^2 - 4D < 0, got T = " + trace.str() + ", D = " + det.str());
  }
  if (det.is_rational() && *det.rational_value() == Rational(1)) {
    const RealAlgebraic half = combine(trace, det, Rational(2) * z - a,
                                       [](const IntervalQ& t, const IntervalQ&) { return Rational(1, 2) * t; });
    return unit_modulus_pair(half);
  }
  const RealAlgebraic v =
      combine(trace, det, Rational(2) * b * (z + MultiPoly(1)) - a * a, [](const IntervalQ& t, const IntervalQ& d) {
        return divide(pow(t, 2), Rational(2) * d) - IntervalQ::point(Rational(1));
      });
  return non_unit_pair(v);
}

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::log;

// Degree cap for the annihilator of mu^k; the reduction-only identity check
// is cheap and gets a larger cap.
constexpr int kMaxVerificationDegree = 12;
constexpr int kMaxIdentityRing = 120;

// Q[y_0, ..., y_{c-1}] modulo a triangular set of monic polynomials.
class TriangularRing {
 public:
  void add(const std::string& var, MultiPoly poly) {
    vars_.push_back(var);
    polys_.push_back(std::move(poly));
  }
  std::size_t size() const { return vars_.size(); }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  const MultiPoly& poly(std::size_t i) const { return polys_[i]; }
  long dimension() const {
    long d = 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) d *= polys_[i].degree(vars_[i]);
    return d;
  }
  MultiPoly reduce(MultiPoly p) const {
    for (std::size_t i = vars_.size(); i-- > 0;) {
      if (p.degree(vars_[i]) >= polys_[i].degree(vars_[i])) p = pseudo_remainder(p, polys_[i], vars_[i]);
    }
    return p.compacted();
  }
  MultiPoly power(const std::string& var, const Integer& e) const {
    MultiPoly result(1), base = reduce(MultiPoly::variable(var));
    Integer k = e;
    while (k > 0) {
      if (k % 2 == 1) result = reduce(result * base);
      k /= 2;
      if (k > 0) base = reduce(base * base);
    }
    return result;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> polys_;
};

BigComplex complex_pow(const BigComplex& z, const Integer& e) {
  BigComplex result(1), base = z;
  Integer k = abs(e);
  while (k > 0) {
    if (k % 2 == 1) result = result * base;
    k /= 2;
    if (k > 0) base = base * base;
  }
  return e < 0 ? BigComplex(1) / result : result;
}

BigFloat distance(const BigComplex& a, const BigComplex& b) { return (a - b).abs(); }

}  // namespace

ResonanceLattice rank_heuristic(const std::vector<AlgebraicEigenvalue>& mu, int bound) {
  const std::size_t n = mu.size();
  ResonanceLattice fail;
  fail.status = LatticeStatus::HeuristicUnverified;
  fail.search_bound = bound;
  fail.method = "integer relation search";
  if (n == 0) return finish({}, LatticeStatus::HeuristicVerified, "integer relation search");

  // Polish every approximation against its own polynomial.
  std::vector<BigComplex> roots(n);
  std::vector<QPoly> polys(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mu[i].poly.degree() < 1) throw InvalidInput("eigenvalue polynomial must have positive degree");
    polys[i] = squarefree_part(mu[i].poly).monic();
    if (polys[i][0].is_zero()) throw InvalidInput("eigenvalue 0: the map is not a local diffeomorphism");
    const auto candidates = complex_roots(polys[i]);
    auto best = std::min_element(candidates.begin(), candidates.end(), [&](const BigComplex& x, const BigComplex& y) {
      return distance(x, mu[i].approx) < distance(y, mu[i].approx);
    });
    if (distance(*best, mu[i].approx) > BigFloat("1e-20") * (1 + mu[i].approx.abs())) {
      fail.notes.push_back("approximation of eigenvalue " + std::to_string(i) + " is not near a root of its polynomial");
      return fail;
    }
    roots[i] = *best;
  }

  // Eigenvalues numerically equal to an earlier one with the same polynomial
  // share its identity; the rest are distinct roots.
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    identity[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (polys[j] == polys[i] && distance(roots[j], roots[i]) < BigFloat("1e-60") * (1 + roots[i].abs())) {
        identity[i] = identity[j];
        break;
      }
    }
  }
  std::string limit_note;
  // Certifies mu^k = 1 in a ring where each distinct used eigenvalue is a
  // variable constrained by a chain of divided differences of its polynomial;
  // the relation then holds for every choice of distinct roots.
  auto certify = [&](const IntVector& k) -> bool {
    std::map<std::size_t, Integer> exponent;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] != 0) exponent[identity[i]] += k[i];
    }
    TriangularRing ring;
    std::map<std::size_t, std::string> var_of;
    std::map<std::vector<Rational>, std::pair<MultiPoly, std::string>> chain_top;
    for (const auto& [id, e] : exponent) {
      if (e == 0) continue;
      const std::string var = "y" + std::to_string(id);
      const auto key = polys[id].coefficients();
      MultiPoly chain;
      auto it = chain_top.find(key);
      if (it == chain_top.end()) {
        chain = polys[id].to_multi(var);
      } else {
        const auto& [previous, last] = it->second;
        chain = exact_divide(previous.substitute(last, MultiPoly::variable(var)) - previous,
                             MultiPoly::variable(var) - MultiPoly::variable(last));
      }
      chain_top[key] = {chain, var};
      ring.add(var, chain);
      var_of[id] = var;
    }
    if (ring.dimension() > kMaxIdentityRing) {
      limit_note = "verification ring exceeded dimension " + std::to_string(kMaxIdentityRing);
      return false;
    }
    MultiPoly lhs(1), rhs(1);
    for (const auto& [id, e] : exponent) {
      if (e > 0) lhs = ring.reduce(lhs * ring.power(var_of[id], e));
      if (e < 0) rhs = ring.reduce(rhs * ring.power(var_of[id], -e));
    }
    if ((lhs - rhs).is_zero()) return true;
    if (ring.dimension() > kMaxVerificationDegree) {
      limit_note = "annihilator degree would exceed " + std::to_string(kMaxVerificationDegree);
      return false;
    }
    // Not an identity for every choice of roots: decide for the chosen roots
    // through the annihilator P of w = mu^k and a root separation bound at 1.
    MultiPoly rel = MultiPoly::variable("z_") * rhs - lhs;
    for (std::size_t j = ring.size(); j-- > 0;) rel = resultant(ring.poly(j), rel, ring.var(j));
    QPoly annihilator = QPoly::from_multi(rel.compacted(), "z_");
    if (annihilator.is_zero() || !annihilator.evaluate(Rational(1)).is_zero()) return false;
    const QPoly root_one({-1, 1});
    while (annihilator.evaluate(Rational(1)).is_zero()) annihilator = exact_divide(annihilator, root_one);
    if (annihilator.degree() == 0) return true;
    const QPoly other = annihilator.primitive();
    BigFloat norm2 = 0;
    for (const auto& c : other.coefficients()) norm2 += to_big(c) * to_big(c);
    const BigFloat separation = abs(to_big(other.evaluate(Rational(1)))) /
                                (boost::multiprecision::pow(BigFloat(2), other.degree()) *
                                 boost::multiprecision::sqrt(norm2));
    BigComplex value(1);
    for (std::size_t i = 0; i < n; ++i) value = value * complex_pow(roots[i], k[i]);
    return separation > BigFloat("1e-50") && distance(value, BigComplex(1)) < separation / 2;
  };

  // Lattice rows (e_i, C log|mu_i|, C arg(mu_i) / 2 pi) and (0, 0, C).
  const BigFloat scale = boost::multiprecision::pow(BigFloat(10), 70);
  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  auto to_integer = [](const BigFloat& x) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
    return z;
  };
  IntMatrix rows(n + 1, IntVector(n + 2, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    rows[i][n] = to_integer(scale * log(roots[i].abs()));
    rows[i][n + 1] = to_integer(scale * roots[i].arg() / two_pi);
  }
  rows[n][n + 1] = to_integer(scale);
  const IntMatrix reduced = lll_reduce(rows);

  const Integer residual_cap = Integer(1000000);
  IntMatrix candidates;
  for (const auto& row : reduced) {
    IntVector k(row.begin(), row.begin() + static_cast<long>(n));
    if (std::all_of(k.begin(), k.end(), [](const Integer& x) { return x == 0; })) continue;
    if (abs(row[n]) > residual_cap || abs(row[n + 1]) > residual_cap) continue;
    candidates.push_back(k);
  }
  // Roots of unity are found directly from their polynomial.
  for (std::size_t i = 0; i < n; ++i) {
    const auto unity = is_root_of_unity(polys[i]);
    if (unity.is_root_of_unity && unity.order && *unity.order <= bound) {
      IntVector k(n, 0);
      k[i] = *unity.order;
      candidates.push_back(k);
    }
  }
  IntMatrix verified, doubtful;
  for (const auto& k : candidates) {
    if (std::any_of(k.begin(), k.end(), [&](const Integer& x) { return abs(x) > bound; })) continue;
    BigComplex value(1);
    for (std::size_t i = 0; i < n; ++i) value = value * complex_pow(roots[i], k[i]);
    if (distance(value, BigComplex(1)) > BigFloat("1e-60")) continue;
    (certify(k) ? verified : doubtful).push_back(k);
  }
  const IntMatrix verified_basis = lattice_basis(verified);
  int unverified = 0;
  for (const auto& k : doubtful) {
    if (!lattice_contains(verified_basis, k)) ++unverified;
  }
  ResonanceLattice out = finish(verified, unverified == 0 ? LatticeStatus::HeuristicVerified
                                                          : LatticeStatus::HeuristicUnverified,
                                "integer relation search");
  out.search_bound = bound;
  if (!limit_note.empty()) out.notes.push_back(limit_note);
  if (unverified > 0) out.notes.push_back(std::to_string(unverified) + " numerical relation(s) could not be certified");
  return out;
}

namespace {

AlgebraicEigenvalue match_factor(const std::vector<Factor>& factors, const BigComplex& z) {
  const QPoly* best = nullptr;
  BigFloat best_score = 0;
  for (const auto& f : factors) {
    BigFloat scale = 0;
    const BigFloat r = std::max(BigFloat(1), z.abs());
    BigFloat power = 1;
    for (const auto& c : f.poly.coefficients()) {
      scale += abs(to_big(c)) * power;
      power *= r;
    }
    const BigFloat score = evaluate(f.poly, z).abs() / scale;
    if (best == nullptr || score < best_score) {
      best = &f.poly;
      best_score = score;
    }
  }
  if (best == nullptr) throw InvariantViolation("no factor for an eigenvalue");
  return {*best, z};
}

std::vector<AlgebraicEigenvalue> eigen_data(const QPoly& exact, const std::vector<BigComplex>& approx) {
  const auto fac = factor_uni_bounded(exact);
  std::vector<AlgebraicEigenvalue> out;
  for (const auto& z : approx) out.push_back(match_factor(fac.factors, z));
  return out;
}

}  // namespace

Theorem1Bound theorem1_bound(const RationalMap& f, const AlgebraicPoint& fp, int bound) {
  if (!f.params.empty()) throw InvalidInput("theorem1_bound needs a parameter-free map; specialize it first");
  const std::size_t n = f.dimension();
  if (fp.coords.size() != n) throw InvalidInput("fixed point has the wrong dimension");
  const NumberField& k = fp.field;
  for (std::size_t i = 0; i < n; ++i) {
    if (!k.reduce(fp.value(f.components[i]) - fp.coords[i]).is_zero()) {
      throw InvalidInput("point " + fp.str() + " is not a fixed point");
    }
  }
  const Matrix jac = jacobian(f);
  if (k.sign(fp.value(determinant(jac))) == 0) {
    throw HypothesisFailure("Df is singular at " + fp.str());
  }

  const CharPolyData cp = char_poly(f);
  std::vector<QPoly> coeff;  // field elements, coefficient of mu^j
  for (const auto& c : cp.numerator.coefficients(cp.eigen_var)) coeff.push_back(fp.value(c));
  while (!coeff.empty() && k.reduce(coeff.back()).is_zero()) coeff.pop_back();
  if (static_cast<std::size_t>(coeff.size()) != n + 1) throw InvariantViolation("characteristic polynomial lost degree");

  Theorem1Bound out;
  if (fp.is_rational()) {
    std::vector<Rational> c;
    for (const auto& e : coeff) c.push_back(k.reduce(e)[0]);
    const QPoly chi(c);
    const auto rr = rational_roots(chi);
    int found = 0;
    std::vector<Rational> eig;
    for (const auto& r : rr) {
      found += r.multiplicity;
      for (int m = 0; m < r.multiplicity; ++m) eig.push_back(r.value);
    }
    if (found == static_cast<int>(n)) {
      out.lattice = rank_rational_eigs(eig);
      out.eigen_structure = "rational";
      for (const auto& e : eig) out.eigenvalues.push_back({QPoly({-e, Rational(1)}), BigComplex(to_big(e))});
    } else if (n == 2 && chi[1] * chi[1] - Rational(4) * chi[0] * chi[2] < Rational(0)) {
      out.lattice = rank_conjugate_pair(-chi[1] / chi[2], chi[0] / chi[2]);
      out.eigen_structure = "conjugate-pair";
      out.eigenvalues = eigen_data(chi, complex_roots(chi));
    } else {
      out.eigenvalues = eigen_data(chi, complex_roots(chi));
      out.lattice = rank_heuristic(out.eigenvalues, bound);
      out.eigen_structure = "general";
    }
    out.bound = out.lattice.rank;
    return out;
  }

  // Algebraic fixed point: the pair (T, D) lives in the field; otherwise use the
  // norm polynomial over Q and numerical eigenvalues.
  const std::string t = "t_", m = cp.eigen_var;
  MultiPoly chi_t;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    chi_t += coeff[j].to_multi(t) * pow(MultiPoly::variable(m), static_cast<unsigned>(j));
  }
  const QPoly norm = squarefree_part(QPoly::from_multi(resultant(k.modulus().to_multi(t), chi_t, t).compacted(), m));

  const RealAlgebraic alpha = k.generator().refined(Rational(Integer(1), Integer(1) << 420));
  const Rational alpha_mid = alpha.interval().midpoint();
  std::vector<Rational> approx_coeff;
  for (const auto& e : coeff) approx_coeff.push_back(k.reduce(e).evaluate(alpha_mid));
  std::vector<BigComplex> approx;
  for (const auto& z : complex_roots(QPoly(approx_coeff))) {
    // Snap to the nearest root of the exact norm polynomial.
    const auto exact_roots = complex_roots(norm);
    approx.push_back(*std::min_element(exact_roots.begin(), exact_roots.end(),
                                       [&](const BigComplex& x, const BigComplex& y) {
                                         return distance(x, z) < distance(y, z);
                                       }));
  }
  out.eigenvalues = eigen_data(norm, approx);
  if (n == 2) {
    const QPoly inv = k.inverse(coeff[2]);
    const QPoly trace = k.mul(-coeff[1], inv), det = k.mul(coeff[0], inv);
    const QPoly disc = k.reduce(k.mul(trace, trace) - det * Rational(4));
    if (k.sign(disc) < 0) {
      out.lattice = rank_conjugate_pair(k.real_value(trace), k.real_value(det));
      out.eigen_structure = "conjugate-pair";
      out.bound = out.lattice.rank;
      return out;
    }
  }
  out.lattice = rank_heuristic(out.eigenvalues, bound);
  out.eigen_structure = "general";
  out.bound = out.lattice.rank;
  return out;
}

}  // namespace resint
