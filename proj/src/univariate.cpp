#include "resint/univariate.hpp"

#include <ostream>

#include "resint/errors.hpp"

namespace resint {

QPoly::QPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> cs(static_cast<std::size_t>(power) + 1);
  cs.back() = c;
  return QPoly(std::move(cs));
}

QPoly QPoly::from_multi(const MultiPoly& p, std::string_view var) {
  for (const auto& used : p.used_variables()) {
    if (used != var) {
      throw InvalidInput("expected a polynomial in " + std::string(var) + " only: " + p.str());
    }
  }
  const int d = p.degree(var);
  if (d < 0) return {};
  std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
  const auto idx = p.index_of(var);
  for (const auto& [e, c] : p.terms()) cs[idx ? e[*idx] : 0] = c;
  return QPoly(std::move(cs));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational QPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& QPoly::leading() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> cs(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) cs[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return QPoly(std::move(cs));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * (Rational(1) / leading());
}

QPoly QPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer g = 0, l = 1;
  for (const auto& c : c_) {
    g = gcd(g, c.numerator());
    l = lcm(l, c.denominator());
  }
  Rational scale(l, g);
  if (leading().sign() < 0) scale = -scale;
  return *this * scale;
}

std::vector<Integer> QPoly::integer_coefficients() const {
  std::vector<Integer> out;
  for (const auto& c : primitive().c_) out.push_back(c.numerator());
  return out;
}

QPoly QPoly::reflected() const {
  QPoly out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

QPoly QPoly::reciprocal() const {
  std::vector<Rational> cs(c_.rbegin(), c_.rend());
  return QPoly(std::move(cs));
}

MultiPoly QPoly::to_multi(const std::string& var) const {
  MultiPoly out(std::vector<std::string>{var});
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out += MultiPoly::term(c_[k], Exponents{static_cast<std::uint32_t>(k)}, {var});
  }
  return out;
}

std::string QPoly::str(const std::string& var) const { return to_multi(var).str(); }

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) cs[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(cs));
}

QPoly operator*(QPoly a, const Rational& c) {
  for (auto& v : a.c_) v *= c;
  a.trim();
  return a;
}

QPoly operator-(const QPoly& a) { return a * Rational(-1); }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = Rational(1) / b.leading();
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly exact_divide(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("(" + b.str() + ") does not divide (" + a.str() + ")");
  return q;
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly result = QPoly::constant(Rational(1));
  QPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

QPoly compose(const QPoly& p, const QPoly& q) {
  QPoly out;
  for (int k = p.degree(); k >= 0; --k) out = out * q + QPoly::constant(p[k]);
  return out;
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
  QPoly a = a0, b = b0;
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  return exact_divide(p, gcd(p, p.derivative())).primitive();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  const QPoly f = p.monic();
  QPoly a = gcd(f, f.derivative());
  QPoly b = exact_divide(f, a);
  QPoly c = exact_divide(f.derivative(), a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.primitive(), i);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Rational resultant(const QPoly& a0, const QPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw InvalidInput("resultant with the zero polynomial");
  QPoly a = a0, b = b0;
  Rational result(1);
  // Res(a, b) = (-1)^(deg a deg b) Res(b, a);  Res(a, b) = lc(b)^(deg a - deg r) Res(r, b)
  // for r = a mod b is applied in the swapped form below.
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return result * pow(b.leading(), da);
    if (da == 0) return result * pow(a.leading(), db);
    auto r = divmod(a, b).second;
    if (r.is_zero()) return Rational(0);
    // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
    if ((da % 2 == 1) && (db % 2 == 1)) result = -result;
    result *= pow(b.leading(), da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

UniPoly::UniPoly(MultiPoly poly, std::string var) : poly_(std::move(poly)), var_(std::move(var)) {
  if (!poly_.index_of(var_)) poly_ = poly_.with_variables(merge_variables(poly_.variables(), {var_}));
}

UniPoly::UniPoly(const QPoly& dense, std::string var) : UniPoly(dense.to_multi(var), var) {}

bool UniPoly::has_rational_coefficients() const {
  for (const auto& v : poly_.used_variables()) {
    if (v != var_) return false;
  }
  return true;
}

QPoly UniPoly::dense() const { return QPoly::from_multi(poly_, var_); }

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

}  // namespace resint
