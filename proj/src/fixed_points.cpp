#include "resint/fixed_points.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "resint/algebra.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"

namespace resint {

namespace {

// Polynomial in y with coefficients in a number field.
using FieldPoly = std::vector<QPoly>;

void trim(FieldPoly& p, const NumberField& k) {
  while (!p.empty() && k.sign(p.back()) == 0) p.pop_back();
}

FieldPoly field_poly(const MultiPoly& s, const std::string& xvar, const std::string& yvar, const NumberField& k) {
  FieldPoly out;
  for (const auto& c : s.coefficients(yvar)) out.push_back(k.reduce(QPoly::from_multi(c.compacted(), xvar)));
  trim(out, k);
  return out;
}

FieldPoly field_rem(FieldPoly a, const FieldPoly& b, const NumberField& k) {
  const QPoly inv = k.inverse(b.back());
  while (a.size() >= b.size()) {
    const QPoly q = k.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.reduce(a[shift + i] - q * b[i]);
    a.pop_back();
    trim(a, k);
  }
  return a;
}

FieldPoly field_gcd(FieldPoly a, FieldPoly b, const NumberField& k) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    FieldPoly r = field_rem(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Fixed points whose first coordinate is the real root alpha of `factor`;
// nullopt when several second coordinates share alpha.
std::optional<std::vector<AlgebraicPoint>> points_over(const FixedPointSystem& sys, std::size_t first,
                                                       const QPoly& factor, const RealAlgebraic& alpha) {
  const std::string& xv = sys.state_vars[first];
  const std::string& yv = sys.state_vars[1 - first];
  const NumberField k(factor, alpha);
  FieldPoly g = field_gcd(field_poly(sys.equations[0], xv, yv, k), field_poly(sys.equations[1], xv, yv, k), k);
  if (g.size() <= 1) return std::vector<AlgebraicPoint>{};  // constant gcd: no solution above alpha
  if (g.size() > 2) return std::nullopt;
  const QPoly y = k.reduce(-k.mul(g[0], k.inverse(g[1])));
  AlgebraicPoint p{sys.state_vars, k, {}};
  p.coords.resize(2);
  p.coords[first] = QPoly({0, 1});
  p.coords[1 - first] = y;
  for (const auto& q : sys.nondegeneracy) {
    if (k.sign(p.value(q)) == 0) return std::vector<AlgebraicPoint>{};  // pole: spurious
  }
  return std::vector<AlgebraicPoint>{p};
}

std::vector<std::pair<QPoly, RealAlgebraic>> real_roots_by_factor(const MultiPoly& eliminant, const std::string& var) {
  std::vector<std::pair<QPoly, RealAlgebraic>> out;
  const QPoly dense = QPoly::from_multi(eliminant.compacted(), var);
  for (const auto& f : factor_uni_bounded(dense).factors) {
    for (auto& r : sturm_isolate(f.poly)) out.emplace_back(f.poly, std::move(r));
  }
  return out;
}

// Polynomial in `v` alone obtained from `eqs` by successive resultants, or
// zero when elimination degenerates.
MultiPoly eliminant_in(std::vector<MultiPoly> eqs, const std::vector<std::string>& vars, const std::string& v) {
  for (const auto& u : vars) {
    if (u == v) continue;
    std::vector<MultiPoly> with, without;
    for (auto& e : eqs) (e.depends_on(u) ? with : without).push_back(std::move(e));
    if (with.empty()) {
      eqs = std::move(without);
      continue;
    }
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < with.size(); ++i) {
      if (with[i].degree(u) < with[pivot].degree(u)) pivot = i;
    }
    for (std::size_t i = 0; i < with.size(); ++i) {
      if (i == pivot) continue;
      MultiPoly r = resultant(with[pivot], with[i], u);
      if (!r.is_zero()) without.push_back(std::move(r));
    }
    eqs = std::move(without);
  }
  MultiPoly g;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? e : gcd(g, e);
  }
  return g;
}

// Rational common zeros of parameter-free equations; empty when some stage
// leaves a variable unconstrained.
std::vector<std::vector<Rational>> rational_solutions(const std::vector<MultiPoly>& eqs,
                                                      const std::vector<std::string>& vars) {
  std::vector<MultiPoly> live;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return {};
    live.push_back(e);
  }
  if (vars.empty()) return {{}};
  if (live.empty()) return {};
  const std::string& v = vars.back();
  const MultiPoly g = eliminant_in(live, vars, v);
  if (g.is_zero() || !g.depends_on(v)) return {};
  const std::vector<std::string> rest(vars.begin(), vars.end() - 1);
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rational_roots(QPoly::from_multi(g.compacted(), v))) {
    std::vector<MultiPoly> sub;
    for (const auto& e : live) sub.push_back(e.evaluate(v, r.value));
    for (auto& s : rational_solutions(sub, rest)) {
      s.push_back(r.value);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

PlanarElimination eliminate_fixed_points(const FixedPointSystem& sys) {
  if (sys.state_vars.size() != 2) throw InvalidInput("planar elimination needs exactly two state variables");
  PlanarElimination out;
  const auto& s1 = sys.equations[0];
  const auto& s2 = sys.equations[1];
  if (s1.is_zero() || s2.is_zero()) {
    out.degenerate = true;
    out.diagnostic = "a fixed-point equation vanishes identically: continuum of fixed points";
    return out;
  }
  const std::string& x = sys.state_vars[0];
  const std::string& y = sys.state_vars[1];
  out.eliminant_last = resultant(s1, s2, x);
  out.eliminant_first = resultant(s1, s2, y);
  if (out.eliminant_last.is_zero() || out.eliminant_first.is_zero()) {
    out.degenerate = true;
    out.diagnostic = "eliminant vanishes identically: continuum of fixed points or degenerate elimination";
    return out;
  }
  for (const auto& e : {out.eliminant_last, out.eliminant_first}) {
    for (const auto& v : e.used_variables()) {
      if (v != x && v != y) return out;  // parametric: eliminants only
    }
  }

  // Resolve along x; fall back to y for x-roots carrying several points.
  std::vector<AlgebraicPoint> found;
  std::vector<RealAlgebraic> ambiguous;
  for (const auto& [factor, alpha] : real_roots_by_factor(out.eliminant_first, x)) {
    if (auto pts = points_over(sys, 0, factor, alpha)) {
      found.insert(found.end(), pts->begin(), pts->end());
    } else {
      ambiguous.push_back(alpha);
    }
  }
  if (!ambiguous.empty()) {
    for (const auto& [factor, beta] : real_roots_by_factor(out.eliminant_last, y)) {
      auto pts = points_over(sys, 1, factor, beta);
      if (!pts) {
        out.unresolved.push_back("several fixed points with " + y + " = " + beta.str());
        continue;
      }
      for (auto& p : *pts) {
        const RealAlgebraic px = p.coordinate(0);
        const bool wanted = std::any_of(ambiguous.begin(), ambiguous.end(),
                                        [&](const RealAlgebraic& a) { return same_value(a, px); });
        if (wanted) found.push_back(std::move(p));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const AlgebraicPoint& a, const AlgebraicPoint& b) {
    return a.coordinate(0).to_double() < b.coordinate(0).to_double() ||
           (a.coordinate(0).to_double() == b.coordinate(0).to_double() &&
            a.coordinate(1).to_double() < b.coordinate(1).to_double());
  });
  out.real_fixed_points = std::move(found);
  return out;
}

std::vector<std::vector<Rational>> parameter_free_rational_fixed_points(const RationalMap& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97), den(1, 53);
  const FixedPointSystem sys = fixed_point_system(f);

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::map<std::string, Rational> values;
    for (const auto& p : f.params) values[p] = Rational(Integer(num(rng)), Integer(den(rng)));
    RationalMap spec;
    try {
      spec = f.specialize(values);
    } catch (const PoleError&) {
      continue;
    }
    std::vector<std::vector<Rational>> candidates;
    if (f.dimension() == 2) {
      const auto elim = eliminate_fixed_points(fixed_point_system(spec));
      if (elim.degenerate) return {};
      for (const auto& p : elim.real_fixed_points) {
        if (auto r = p.rational_coords()) candidates.push_back(*r);
      }
    } else {
      candidates = rational_solutions(fixed_point_system(spec).equations, f.state_vars);
    }
    std::vector<std::vector<Rational>> confirmed;
    for (const auto& c : candidates) {
      bool ok = true;
      for (std::size_t i = 0; i < sys.equations.size() && ok; ++i) {
        MultiPoly s = sys.equations[i], q = sys.nondegeneracy[i];
        for (std::size_t j = 0; j < c.size(); ++j) {
          s = s.evaluate(f.state_vars[j], c[j]);
          q = q.evaluate(f.state_vars[j], c[j]);
        }
        ok = s.is_zero() && !q.is_zero();
      }
      if (ok) confirmed.push_back(c);
    }
    return confirmed;
  }
  throw InvalidInput("could not find a regular parameter specialization");
}

std::vector<AlgebraicPoint> real_fixed_points(const RationalMap& f) {
  if (!f.params.empty()) throw InvalidInput("real fixed points need a parameter-free map");
  if (f.dimension() == 2) {
    auto elim = eliminate_fixed_points(fixed_point_system(f));
    if (elim.degenerate) throw InvalidInput(elim.diagnostic);
    return elim.real_fixed_points;
  }
  std::vector<AlgebraicPoint> out;
  for (const auto& r : parameter_free_rational_fixed_points(f)) out.push_back(AlgebraicPoint::rational(f.state_vars, r));
  return out;
}

}  // namespace resint
