#include "resint/rational_function.hpp"

#include <algorithm>

#include "resint/algebra.hpp"
#include "resint/errors.hpp"

namespace resint {

namespace {

// Normalize den to a primitive polynomial with positive leading coefficient.
void normalize(MultiPoly& num, MultiPoly& den) {
  const Rational scale = den.content() * Rational(den.leading_coefficient().sign());
  if (scale != Rational(1)) {
    const Rational inv = Rational(1) / scale;
    num *= inv;
    den *= inv;
  }
  num = num.compacted();
  den = den.compacted();
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1) { num_ = num_.compacted(); }

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInput("identically zero denominator");
  if (num_.is_zero()) {
    num_ = MultiPoly(0);
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  normalize(num_, den_);
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = MultiPoly(1);
  normalize(num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFunction::Reduced{});
  }
  const MultiPoly g = gcd(a.den_, b.den_);
  const MultiPoly ad = exact_divide(a.den_, g), bd = exact_divide(b.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.num_, a.den_, RationalFunction::Reduced{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, RationalFunction::Reduced{});
  }
  // Cross-cancel: inputs are reduced, so only num/den pairs across operands share factors.
  const MultiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  return RationalFunction(exact_divide(a.num_, g1) * exact_divide(b.num_, g2),
                          exact_divide(a.den_, g2) * exact_divide(b.den_, g1), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_, RationalFunction::Reduced{});
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction pow(const RationalFunction& f, long e) {
  if (e < 0) {
    if (f.is_zero()) throw InvalidInput("negative power of zero");
    return RationalFunction(1) / pow(f, -e);
  }
  return RationalFunction(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
  if (!depends_on(var)) return {};
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RationalFunction substitute(const MultiPoly& p, const std::map<std::string, RationalFunction>& values) {
  // Homogenize over a common denominator: p(a/b) = sum c_e prod a^e b^(d-e) / prod b^d.
  std::vector<std::size_t> slots;
  std::vector<const RationalFunction*> repl;
  std::vector<unsigned> degree;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    auto it = values.find(p.variables()[i]);
    if (it == values.end()) continue;
    const int d = p.degree(p.variables()[i]);
    if (d <= 0) continue;
    slots.push_back(i);
    repl.push_back(&it->second);
    degree.push_back(static_cast<unsigned>(d));
  }
  if (slots.empty()) return RationalFunction(p);

  // Cache powers of numerators and denominators.
  std::vector<std::vector<MultiPoly>> num_pow(slots.size()), den_pow(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    num_pow[k].push_back(MultiPoly(1));
    den_pow[k].push_back(MultiPoly(1));
    for (unsigned e = 1; e <= degree[k]; ++e) {
      num_pow[k].push_back(num_pow[k].back() * repl[k]->num());
      den_pow[k].push_back(den_pow[k].back() * repl[k]->den());
    }
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (std::find(slots.begin(), slots.end(), i) == slots.end()) rest.push_back(p.variables()[i]);
  }
  MultiPoly total;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (std::find(slots.begin(), slots.end(), i) == slots.end()) kept.push_back(e[i]);
    }
    MultiPoly t = MultiPoly::term(c, kept, rest);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const unsigned ek = e[slots[k]];
      t *= num_pow[k][ek] * den_pow[k][degree[k] - ek];
    }
    total += t;
  }
  MultiPoly den(1);
  for (std::size_t k = 0; k < slots.size(); ++k) den *= den_pow[k][degree[k]];
  return RationalFunction(total, den);
}

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction>& values) const {
  const RationalFunction n = resint::substitute(num_, values), d = resint::substitute(den_, values);
  if (d.is_zero()) throw PoleError("substitution makes the denominator vanish identically");
  return n / d;
}

RationalFunction RationalFunction::evaluate(std::string_view var, const Rational& value) const {
  const MultiPoly d = den_.evaluate(var, value);
  if (d.is_zero()) throw PoleError("denominator vanishes at " + std::string(var) + " = " + value.str());
  return RationalFunction(num_.evaluate(var, value), d);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw PoleError("denominator " + den_.str() + " vanishes");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return (num_ * (Rational(1) / den_.constant_value())).str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(0);
  return (exact_divide(a, gcd(a, b)) * b).primitive();
}

}  // namespace resint
