#include "resint/rational_map.hpp"

#include <algorithm>

#include "resint/algebra.hpp"
#include "resint/errors.hpp"

namespace resint {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

std::vector<std::string> RationalMap::all_variables() const {
  std::vector<std::string> out = state_vars;
  out.insert(out.end(), params.begin(), params.end());
  return out;
}

std::string RationalMap::render() const {
  std::string out = "vars " + join(state_vars) + ";";
  if (!params.empty()) out += " params " + join(params) + ";";
  out += " f = (";
  for (std::size_t i = 0; i < components.size(); ++i) out += (i ? ", " : "") + components[i].str();
  return out + ")";
}

RationalMap RationalMap::specialize(const std::map<std::string, Rational>& values) const {
  RationalMap out;
  out.state_vars = state_vars;
  for (const auto& p : params) {
    if (!values.count(p)) out.params.push_back(p);
  }
  for (const auto& [name, v] : values) {
    if (std::find(params.begin(), params.end(), name) == params.end()) {
      throw InvalidInput("'" + name + "' is not a parameter of the map");
    }
  }
  for (const auto& c : components) {
    MultiPoly n = c.num(), d = c.den();
    for (const auto& [name, v] : values) {
      n = n.evaluate(name, v);
      d = d.evaluate(name, v);
    }
    if (d.is_zero()) throw PoleError("component denominator vanishes identically after specialization");
    out.components.emplace_back(n, d);
  }
  return out;
}

RationalFunction determinant(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<MultiPoly>> cleared(n, std::vector<MultiPoly>(n));
  MultiPoly scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly row_lcm(1);
    for (const auto& e : m[i]) {
      if (!e.den().is_constant()) row_lcm = lcm(row_lcm, e.den());
    }
    for (std::size_t j = 0; j < n; ++j) cleared[i][j] = m[i][j].num() * exact_divide(row_lcm, m[i][j].den());
    scale *= row_lcm;
  }
  return RationalFunction(determinant(std::move(cleared)), scale);
}

Matrix jacobian(const RationalMap& f) {
  Matrix j(f.dimension());
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    for (const auto& v : f.state_vars) j[i].push_back(f.components[i].derivative(v));
  }
  return j;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

CharPolyData char_poly(const RationalMap& f) {
  CharPolyData out;
  out.eigen_var = fresh_name(f.all_variables());
  const Matrix j = jacobian(f);
  const RationalFunction mu(MultiPoly::variable(out.eigen_var));
  Matrix shifted = j;
  for (std::size_t i = 0; i < j.size(); ++i) {
    for (std::size_t k = 0; k < j.size(); ++k) shifted[i][k] = (i == k ? mu : RationalFunction()) - j[i][k];
  }
  out.numerator = determinant(shifted).num();
  if (f.dimension() == 2) {
    out.trace = j[0][0] + j[1][1];
    out.det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
  }
  return out;
}

FixedPointSystem fixed_point_system(const RationalMap& f) {
  FixedPointSystem sys;
  sys.state_vars = f.state_vars;
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    const auto& c = f.components[i];
    sys.equations.push_back((c.num() - MultiPoly::variable(f.state_vars[i]) * c.den()).compacted());
    sys.nondegeneracy.push_back(c.den());
  }
  return sys;
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (f.state_vars != g.state_vars) throw InvalidInput("composition needs matching state variables");
  std::map<std::string, RationalFunction> values;
  for (std::size_t i = 0; i < g.dimension(); ++i) values.emplace(g.state_vars[i], g.components[i]);
  RationalMap out;
  out.state_vars = f.state_vars;
  out.params = f.params;
  for (const auto& p : g.params) {
    if (std::find(out.params.begin(), out.params.end(), p) == out.params.end()) out.params.push_back(p);
  }
  for (const auto& c : f.components) out.components.push_back(c.substitute(values));
  return out;
}

RationalMap identity_map(const std::vector<std::string>& state_vars, const std::vector<std::string>& params) {
  RationalMap id{state_vars, params, {}};
  for (const auto& v : state_vars) id.components.emplace_back(MultiPoly::variable(v));
  return id;
}

RationalMap iterate_map(const RationalMap& f, unsigned times) {
  RationalMap out = identity_map(f.state_vars, f.params);
  for (unsigned k = 0; k < times; ++k) out = compose(f, out);
  return out;
}

std::vector<Rational> evaluate(const RationalMap& f, const std::vector<Rational>& point,
                               const std::map<std::string, Rational>& params) {
  if (point.size() != f.dimension()) throw InvalidInput("point has the wrong dimension");
  std::map<std::string, Rational> assignment = params;
  for (const auto& p : f.params) {
    if (!assignment.count(p)) throw InvalidInput("no value for parameter '" + p + "'");
  }
  for (std::size_t i = 0; i < point.size(); ++i) assignment[f.state_vars[i]] = point[i];
  std::vector<Rational> out;
  for (const auto& c : f.components) out.push_back(c.evaluate(assignment));
  return out;
}

std::vector<std::vector<Rational>> iterate(const RationalMap& f, const std::vector<Rational>& point,
                                           unsigned steps, const std::map<std::string, Rational>& params) {
  std::vector<std::vector<Rational>> orbit{point};
  for (unsigned k = 0; k < steps; ++k) orbit.push_back(evaluate(f, orbit.back(), params));
  return orbit;
}

}  // namespace resint
