#include "resint/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "resint/errors.hpp"

namespace resint {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(const std::string& name) { return variable(name, {name}); }

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
    variables.push_back(name);
  }
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[*p.index_of(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(const Rational& coefficient, Exponents exponents,
                          std::vector<std::string> variables) {
  if (exponents.size() != variables.size()) {
    throw InvalidInput("exponent vector length does not match variable count");
  }
  MultiPoly p(std::move(variables));
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coefficients,
                                       const std::string& var) {
  MultiPoly x = MultiPoly::variable(var);
  MultiPoly result;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    result = result * x + coefficients[k];
  }
  if (!result.index_of(var)) result = result.with_variables(merge_variables(result.vars_, {var}));
  return result;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](auto e) { return e == 0; }));
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw InvalidInput("polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) return i;
  }
  return std::nullopt;
}

bool MultiPoly::depends_on(std::string_view var) const { return degree(var) > 0; }

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

int MultiPoly::degree(std::string_view var) const {
  if (terms_.empty()) return -1;
  const auto idx = index_of(var);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw InvalidInput("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::ptrdiff_t> target(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) target[i] = it - variables.begin();
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0) {
        throw InvalidInput("variable '" + vars_[i] + "' is used but missing from target ring");
      }
      ne[static_cast<std::size_t>(target[i])] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::compacted() const { return with_variables(used_variables()); }

std::vector<MultiPoly> MultiPoly::coefficients(std::string_view var) const {
  const int d = degree(var);
  if (d < 0) return {};
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
  const auto idx = index_of(var);
  for (const auto& [e, c] : terms_) {
    std::uint32_t k = 0;
    Exponents ne = e;
    if (idx) {
      k = e[*idx];
      ne[*idx] = 0;
    }
    out[k].terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient(std::string_view var, int power) const {
  auto cs = coefficients(var);
  if (power < 0 || static_cast<std::size_t>(power) >= cs.size()) return MultiPoly(vars_);
  return cs[static_cast<std::size_t>(power)];
}

MultiPoly MultiPoly::leading_coefficient(std::string_view var) const {
  if (terms_.empty()) return MultiPoly(vars_);
  return coefficient(var, degree(var));
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  MultiPoly out(vars_);
  const auto idx = index_of(var);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents ne = e;
    ne[*idx] -= 1;
    out.add_term(ne, c * Rational(static_cast<long>(e[*idx])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  const auto idx = index_of(var);
  if (!idx || degree(var) == 0) return *this;
  auto cs = coefficients(var);
  MultiPoly result(vars_);
  for (std::size_t k = cs.size(); k-- > 0;) result = result * value + cs[k];
  return result;
}

MultiPoly MultiPoly::evaluate(std::string_view var, const Rational& value) const {
  const auto idx = index_of(var);
  if (!idx) return *this;
  MultiPoly out(vars_);
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[*idx]) powers.push_back(powers.back() * value);
    Exponents ne = e;
    ne[*idx] = 0;
    out.add_term(ne, c * powers[e[*idx]]);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) throw InvalidInput("no value for variable '" + vars_[i] + "'");
      t *= pow(*values[i], static_cast<long>(e[i]));
    }
    sum += t;
  }
  return sum;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c.numerator());
    l = lcm(l, c.denominator());
  }
  return Rational(abs(g), l);
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational scale = Rational(1) / content();
  if (leading_coefficient().sign() < 0) scale = -scale;
  return *this * scale;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / leading_coefficient());
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// Brings both operands into a common ring; returns false if no change was needed.
void align(MultiPoly& a, MultiPoly& b) {
  if (a.variables() == b.variables()) return;
  auto vars = merge_variables(a.variables(), b.variables());
  a = a.with_variables(vars);
  b = b.with_variables(vars);
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly b = o;
  align(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
  MultiPoly a = a0, b = b0;
  align(a, b);
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.vars_ == b0.vars_) return a0.terms_ == b0.terms_;
  MultiPoly a = a0, b = b0;
  align(a, b);
  return a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    mag = abs(c);
    first = false;
    bool need_star = false;
    if (unit_monomial || mag != Rational(1)) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly result(Rational(1));
  result = result.with_variables(p.variables());
  MultiPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a0, const MultiPoly& b0) {
  if (b0.is_zero()) throw InvalidInput("division by the zero polynomial");
  MultiPoly a = a0, b = b0;
  align(a, b);
  const auto vars = a.variables();
  MultiPoly quotient(vars);
  MultiPoly rest = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    Exponents t(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      t[i] = lr[i] - lb[i];
    }
    const MultiPoly step = MultiPoly::term(rest.leading_coefficient() / cb, t, vars);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible("(" + b.str() + ") does not divide (" + a.str() + ")");
  return *q;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  const int db = b.degree(var);
  int da = a.degree(var);
  if (da < db) return a;
  const MultiPoly lc = b.leading_coefficient(var);
  const MultiPoly x = MultiPoly::variable(std::string(var));
  MultiPoly r = a;
  int e = da - db + 1;
  while (!r.is_zero() && (da = r.degree(var)) >= db) {
    const MultiPoly t = r.leading_coefficient(var) * pow(x, static_cast<unsigned>(da - db));
    r = lc * r - t * b;
    --e;
  }
  return pow(lc, static_cast<unsigned>(e)) * r;
}

}  // namespace resint
