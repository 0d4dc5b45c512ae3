#include "resint/algebraic_point.hpp"

#include <algorithm>

#include "resint/algebra.hpp"

namespace resint {

namespace {

// Exact test g(alpha) = 0 for the isolated real root alpha.
bool vanishes_at(const QPoly& g, const RealAlgebraic& alpha) {
  if (g.is_zero()) return true;
  if (auto v = alpha.rational_value()) return g.sign_at(*v) == 0;
  const QPoly common = gcd(g, alpha.minpoly());
  if (common.degree() < 1) return false;
  const IntervalQ& iv = alpha.interval();
  return SturmSequence(squarefree_part(common)).count_open(iv.lo, iv.hi) == 1;
}

}  // namespace

NumberField::NumberField() : modulus_({0, 1}), generator_(Rational(0)) {}

NumberField::NumberField(QPoly modulus, RealAlgebraic generator)
    : modulus_(modulus.primitive()), generator_(std::move(generator)) {
  if (modulus_.degree() < 1) throw InvalidInput("number field modulus must be nonconstant");
  if (!vanishes_at(modulus_, generator_)) throw InvalidInput("generator is not a root of the modulus");
}

QPoly NumberField::reduce(const QPoly& e) const {
  if (e.degree() < modulus_.degree()) return e;
  return divmod(e, modulus_).second;
}

QPoly NumberField::inverse(const QPoly& e0) const {
  QPoly m = modulus_;
  QPoly e = reduce(e0);
  // A reducible modulus may make e a zero divisor; then continue modulo the
  // factor that vanishes at alpha, which still represents e(alpha)^-1.
  while (true) {
    if (e.is_zero()) throw InvalidInput("inverse of zero in a number field");
    QPoly r0 = m, r1 = e, s0, s1 = QPoly::constant(Rational(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      QPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() == 0) return reduce(s0 * (Rational(1) / r0[0]));
    const QPoly g = r0.primitive();
    m = vanishes_at(g, generator_) ? g : exact_divide(m, g).primitive();
    e = divmod(e, m).second;
    if (e.is_zero()) throw ZeroDivisor(g);
  }
}

QPoly NumberField::annihilator(const QPoly& e0) const {
  const QPoly e = reduce(e0);
  if (e.degree() <= 0) return QPoly({-e[0], Rational(1)});
  const MultiPoly z = MultiPoly::variable("z");
  const MultiPoly charpoly = resultant(modulus_.to_multi("t"), z - e.to_multi("t"), "t");
  return squarefree_part(QPoly::from_multi(charpoly, "z"));
}

RealAlgebraic NumberField::real_value(const QPoly& e0) const {
  const QPoly e = reduce(e0);
  if (e.degree() <= 0) return RealAlgebraic(e[0]);
  if (auto g = generator_.rational_value()) return RealAlgebraic(e.evaluate(*g));
  const QPoly ann = annihilator(e);
  std::vector<RealAlgebraic> roots = sturm_isolate(ann);
  const MultiPoly em = e.to_multi("t");
  RealAlgebraic gen = generator_;
  for (int round = 0; round < 2000; ++round) {
    const IntervalQ enclosure = eval_on_box(em, {{"t", gen.interval()}});
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (overlaps(roots[i].interval(), enclosure)) hits.push_back(i);
    }
    if (hits.size() == 1) return roots[hits.front()];
    if (hits.empty()) throw InvariantViolation("lost the value of a field element");
    for (auto i : hits) roots[i] = roots[i].bisected();
    gen = gen.bisected();
  }
  throw InvariantViolation("could not separate the value of a field element");
}

int NumberField::sign(const QPoly& e0) const {
  const QPoly e = reduce(e0);
  if (e.degree() <= 0) return e[0].sign();
  if (auto g = generator_.rational_value()) return e.sign_at(*g);
  if (vanishes_at(e, generator_)) return 0;
  // Nonzero, so refinement terminates.
  return *sign_at(e.to_multi("t"), {{"t", generator_}}, Rational(0));
}

AlgebraicPoint AlgebraicPoint::rational(std::vector<std::string> vars, const std::vector<Rational>& values) {
  AlgebraicPoint p{std::move(vars), NumberField(), {}};
  for (const auto& v : values) p.coords.push_back(QPoly::constant(v));
  return p;
}

bool AlgebraicPoint::is_rational() const { return rational_coords().has_value(); }

std::optional<std::vector<Rational>> AlgebraicPoint::rational_coords() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const QPoly c = field.reduce(coords[i]);
    if (c.degree() <= 0) {
      out.push_back(c[0]);
    } else if (auto g = field.generator().rational_value()) {
      out.push_back(c.evaluate(*g));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

RealAlgebraic AlgebraicPoint::coordinate(std::size_t i) const { return field.real_value(coords.at(i)); }

RealPoint AlgebraicPoint::real_point() const {
  RealPoint out;
  for (std::size_t i = 0; i < vars.size(); ++i) out.emplace(vars[i], coordinate(i));
  return out;
}

QPoly AlgebraicPoint::value(const MultiPoly& p) const {
  std::vector<std::size_t> slot;
  for (const auto& v : p.variables()) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) {
      if (p.depends_on(v)) throw InvalidInput("variable '" + v + "' has no value at this point");
      slot.push_back(vars.size());
    } else {
      slot.push_back(static_cast<std::size_t>(it - vars.begin()));
    }
  }
  // Powers are cached per coordinate.
  std::vector<std::vector<QPoly>> powers(vars.size(), {QPoly::constant(Rational(1))});
  auto power = [&](std::size_t i, std::uint32_t e) -> const QPoly& {
    while (powers[i].size() <= e) powers[i].push_back(field.mul(powers[i].back(), coords[i]));
    return powers[i][e];
  };
  QPoly acc;
  for (const auto& [e, c] : p.terms()) {
    QPoly t = QPoly::constant(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) t = field.mul(t, power(slot[k], e[k]));
    }
    acc += t;
  }
  return field.reduce(acc);
}

QPoly AlgebraicPoint::value(const RationalFunction& f) const {
  const QPoly d = value(f.den());
  if (field.sign(d) == 0) throw PoleError("denominator " + f.den().str() + " vanishes at the point");
  return field.mul(value(f.num()), field.inverse(d));
}

std::string AlgebraicPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coordinate(i).str();
  }
  return out + ")";
}

}  // namespace resint
