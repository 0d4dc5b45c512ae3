#include "resint/obstruction.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "resint/algebra.hpp"
#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"

namespace resint {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Excluded:
      return "Excluded";
    case VerdictKind::CandidateParams:
      return "CandidateParams";
    case VerdictKind::CandidateIndices:
      return "CandidateIndices";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

// Appends entries and keeps their values addressable by name.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(Certificate& out) : out_(out) {}

  MultiPoly add(CertificateEntry e) {
    out_.push_back(std::move(e));
    return out_.back().value;
  }
  MultiPoly system(const std::string& name, const std::string& key, MultiPoly value) {
    return add({name, "system", {key}, "", 0, {}, std::move(value)});
  }
  MultiPoly resultant_of(const std::string& name, const std::string& a, const std::string& b,
                                const std::string& var) {
    return add({name, "resultant", {a, b}, var, 0, {}, resultant(get(a), get(b), var)});
  }
  const MultiPoly& get(const std::string& name) const {
    for (auto it = out_.rbegin(); it != out_.rend(); ++it) {
      if (it->name == name) return it->value;
    }
    throw InvariantViolation("certificate has no entry " + name);
  }

 private:
  Certificate& out_;
};

// e(alpha) for a polynomial with rational coefficients evaluated at a field element.
QPoly field_eval(const NumberField& k, const QPoly& p, const QPoly& e) {
  QPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = k.reduce(k.mul(acc, e) + QPoly::constant(p[i]));
  return acc;
}

std::string join_indices(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s;
}

// Tests every selected univariate factor against V_p for all p with
// cos_degree(p) <= max degree; records the resultants and returns the p's
// with a vanishing resultant.
std::vector<long> cos_battery(CertificateBuilder& cb, const std::vector<std::string>& factor_names,
                              const std::string& v, std::vector<long>& searched) {
  int k = 0;
  for (const auto& name : factor_names) k = std::max(k, cb.get(name).degree(v));
  searched = indices_with_cos_degree_at_most(k).indices;
  std::vector<long> hits;
  for (long p : searched) {
    const std::string vp = "V_" + std::to_string(p);
    cb.add({vp, "min_poly_cos", {}, v, p, {}, min_poly_cos(p).poly.to_multi(v)});
    for (const auto& name : factor_names) {
      const MultiPoly r = cb.resultant_of("Res(" + name + "," + vp + ")", name, vp, v);
      if (r.is_zero() && (hits.empty() || hits.back() != p)) hits.push_back(p);
    }
  }
  return hits;
}

QPoly to_q(const MultiPoly& p, const std::string& var) { return QPoly::from_multi(p.compacted(), var); }

}  // namespace

// ---- replay ---------------------------------------------------------------

std::optional<std::string> replay(const RationalMap& f, const Certificate& cert) {
  std::map<std::string, MultiPoly> known;
  std::optional<PlanarSystem> planar;
  std::optional<FixedPointSystem> fps;
  std::optional<CharPolyData> cp;
  auto arg = [&](const CertificateEntry& e, std::size_t i) -> const MultiPoly& {
    auto it = known.find(e.args.at(i));
    if (it == known.end()) throw InvalidInput("certificate entry " + e.name + " refers to unknown " + e.args.at(i));
    return it->second;
  };
  for (const auto& e : cert) {
    MultiPoly expected;
    if (e.op == "system") {
      const std::string& key = e.args.at(0);
      if (key == "W" || ((key == "S1" || key == "S2") && f.dimension() == 2)) {
        if (!planar) planar = planar_system(f);
        expected = key == "W" ? planar->w : (key == "S1" ? planar->s1 : planar->s2);
      } else if (key == "R" || key == "Tnum" || key == "Tden" || key == "Dnum" || key == "Dden") {
        if (!cp) cp = char_poly(f);
        if (key == "R") expected = cp->numerator;
        if (key == "Tnum") expected = cp->trace->num();
        if (key == "Tden") expected = cp->trace->den();
        if (key == "Dnum") expected = cp->det->num();
        if (key == "Dden") expected = cp->det->den();
      } else if (key.size() > 1 && key[0] == 'S') {
        if (!fps) fps = fixed_point_system(f);
        expected = fps->equations.at(std::stoul(key.substr(1)) - 1);
      } else {
        throw InvalidInput("unknown system entry " + key);
      }
    } else if (e.op == "resultant") {
      expected = resultant(arg(e, 0), arg(e, 1), e.var);
    } else if (e.op == "factor_of") {
      if (e.value.total_degree() < 1 || !try_divide(arg(e, 0), e.value)) return e.name;
      expected = e.value;
    } else if (e.op == "divide") {
      expected = exact_divide(arg(e, 0), arg(e, 1));
    } else if (e.op == "content") {
      expected = content_in(arg(e, 0), e.var);
    } else if (e.op == "primitive") {
      expected = arg(e, 0).primitive();
    } else if (e.op == "min_poly_cos") {
      expected = min_poly_cos(e.index).poly.to_multi(e.var);
    } else if (e.op == "cyclotomic") {
      expected = cyclotomic_poly(e.index).to_multi(e.var);
    } else if (e.op == "substitute") {
      expected = arg(e, 0).substitute(e.var, arg(e, 1));
    } else if (e.op == "solve_linear") {
      const MultiPoly& eq = arg(e, 0);
      const MultiPoly c = eq.coefficient(e.var, 1);
      if (eq.degree(e.var) != 1 || !c.is_constant()) return e.name;
      expected = (eq - c * MultiPoly::variable(e.var)) * (Rational(-1) / c.constant_value());
    } else if (e.op == "at_point") {
      expected = arg(e, 0);
      for (std::size_t i = 0; i < f.state_vars.size(); ++i) expected = expected.evaluate(f.state_vars[i], e.coords.at(i));
    } else if (e.op == "cos_condition") {
      // T1^2 D2 - r T2^2 D1 from (T1, T2, D1, D2).
      expected = arg(e, 0) * arg(e, 0) * arg(e, 3) - Rational(e.index) * arg(e, 1) * arg(e, 1) * arg(e, 2);
    } else {
      throw InvalidInput("unknown certificate operation " + e.op);
    }
    if (!(expected - e.value).is_zero()) return e.name;
    known[e.name] = e.value;
  }
  return std::nullopt;
}

// ---- planar ---------------------------------------------------------------

PlanarSystem planar_system(const RationalMap& f) {
  if (f.dimension() != 2) throw InvalidInput("planar analysis needs a map in two variables");
  const FixedPointSystem sys = fixed_point_system(f);
  const CharPolyData cp = char_poly(f);
  PlanarSystem out;
  out.x = f.state_vars[0];
  out.y = f.state_vars[1];
  out.v = fresh_name(f.all_variables(), "v");
  out.s1 = sys.equations[0];
  out.s2 = sys.equations[1];
  const MultiPoly& t1 = cp.trace->num();
  const MultiPoly& t2 = cp.trace->den();
  const MultiPoly& d1 = cp.det->num();
  const MultiPoly& d2 = cp.det->den();
  out.w = t1 * t1 * d2 - Rational(2) * (MultiPoly(1) + MultiPoly::variable(out.v)) * t2 * t2 * d1;
  return out;
}

FixedPointReport planar_fixed_point_report(const RationalMap& f, const AlgebraicPoint& fp) {
  if (f.dimension() != 2) throw InvalidInput("planar analysis needs a map in two variables");
  const CharPolyData cp = char_poly(f);
  const NumberField& k = fp.field;
  FixedPointReport rep;
  rep.point = fp;
  rep.trace = k.reduce(fp.value(*cp.trace));
  rep.det = k.reduce(fp.value(*cp.det));
  rep.disc_sign = k.sign(k.mul(rep.trace, rep.trace) - rep.det * Rational(4));
  rep.det_minus_one = k.sign(rep.det - QPoly::constant(Rational(1)));
  auto sign_word = [](int s) { return s < 0 ? std::string("< 0") : (s > 0 ? "> 0" : "= 0"); };
  rep.hypothesis_checks.push_back("T^2 - 4D " + sign_word(rep.disc_sign) + " (exact)");
  rep.hypothesis_checks.push_back("D - 1 " + sign_word(rep.det_minus_one) + " (exact)");
  return rep;
}

ObstructionVerdict planar_pipeline(const RationalMap& f, const AlgebraicPoint& fp, const PlanarOptions& options) {
  if (!f.params.empty()) throw InvalidInput("planar_pipeline needs a parameter-free map; use planar_parametric");
  ObstructionVerdict out;
  CertificateBuilder cb(out.certificate);
  const PlanarSystem ps = planar_system(f);
  cb.system("S1", "S1", ps.s1);
  cb.system("S2", "S2", ps.s2);
  cb.system("W", "W", ps.w);

  const FixedPointReport rep = planar_fixed_point_report(f, fp);
  for (const auto& h : rep.hypothesis_checks) out.notes.push_back("hypothesis: " + h);
  if (!rep.hypotheses_hold()) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = rep.disc_sign >= 0 ? "hypothesis: eigenvalues are not a complex conjugate pair"
                                    : "hypothesis: eigenvalues have modulus 1";
    return out;
  }
  const NumberField& k = fp.field;

  // Remark route: irreducible factors V1(y), V3(x) through the fixed point.
  const MultiPoly t1 = cb.resultant_of("T1", "S1", "S2", ps.x);
  const MultiPoly t3 = cb.resultant_of("T3", "S1", "S2", ps.y);
  if (t1.is_zero() || t3.is_zero()) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = "continuum of fixed points: an eliminant vanishes identically";
    return out;
  }
  auto through_point = [&](const MultiPoly& eliminant, const std::string& var, const QPoly& coordinate) {
    const auto fac = factor_uni_bounded(to_q(eliminant, var), options.factor_budget);
    for (const auto& fa : fac.factors) {
      if (k.sign(field_eval(k, fa.poly, coordinate)) == 0) return fa.poly.to_multi(var);
    }
    throw InvariantViolation("no factor of the eliminant vanishes at the fixed point");
  };
  cb.add({"V1", "factor_of", {"T1"}, "", 0, {}, through_point(t1, ps.y, fp.coords[1])});
  cb.add({"V3", "factor_of", {"T3"}, "", 0, {}, through_point(t3, ps.x, fp.coords[0])});
  if (!options.swap_elimination_order) {
    cb.resultant_of("W1", "W", "V1", ps.y);
    cb.resultant_of("Uref", "W1", "V3", ps.x);
  } else {
    cb.resultant_of("W1", "W", "V3", ps.x);
    cb.resultant_of("Uref", "W1", "V1", ps.y);
  }
  const MultiPoly uref = cb.get("Uref");
  if (uref.is_zero()) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = "degenerate elimination: the reduced U vanishes identically";
    return out;
  }

  // v-hat = T^2 / (2D) - 1 at the fixed point, exactly in the field.
  const QPoly vhat = k.reduce(k.mul(k.mul(rep.trace, rep.trace), k.inverse(rep.det * Rational(2))) -
                              QPoly::constant(Rational(1)));
  const auto ufac = factor_uni_bounded(to_q(uref, ps.v), options.factor_budget);
  std::vector<std::string> selected;
  for (std::size_t i = 0; i < ufac.factors.size(); ++i) {
    const auto& fa = ufac.factors[i];
    if (k.sign(field_eval(k, fa.poly, vhat)) != 0) continue;
    const std::string name = "U" + std::to_string(fa.poly.degree()) + (selected.empty() ? "" : "_" + std::to_string(i));
    cb.add({name, "factor_of", {"Uref"}, "", 0, {}, fa.poly.to_multi(ps.v)});
    selected.push_back(name);
    if (fa.status != FactorStatus::Irreducible) out.notes.push_back(name + " is not certified irreducible");
  }
  if (selected.empty()) throw InvariantViolation("no factor of U vanishes at v-hat");
  out.indices = cos_battery(cb, selected, ps.v, out.searched_indices);
  out.kind = out.indices.empty() ? VerdictKind::Excluded : VerdictKind::CandidateIndices;
  out.reason = out.indices.empty() ? "all " + std::to_string(out.searched_indices.size()) + " resultants are nonzero"
                                   : "vanishing resultants for p in {" + join_indices(out.indices) + "}";

  if (fp.is_rational()) {
    const auto fast = fast_path_rational_fp(rep.trace[0], rep.det[0]);
    const bool agree = (fast.kind == out.kind) && (fast.indices == out.indices);
    out.notes.push_back(std::string("rational fast path ") + (agree ? "agrees" : "DISAGREES"));
  }

  if (options.full_route) {
    // Unreduced route: U = Res_y(Res_x(S1, S2), Res_x(S1, W)).
    Certificate scratch;
    CertificateBuilder full(scratch);
    full.system("S1", "S1", ps.s1);
    full.system("W", "W", ps.w);
    full.add(out.certificate[3]);  // T1
    full.resultant_of("T2", "S1", "W", ps.x);
    const MultiPoly u = full.resultant_of("U", "T1", "T2", ps.y);
    if (u.is_zero()) {
      out.notes.push_back("full elimination U vanishes identically; only the reduced route decides");
    } else {
      const auto ufull = factor_uni_bounded(to_q(u, ps.v), options.factor_budget);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < ufull.factors.size(); ++i) {
        const std::string name = "Ufull_" + std::to_string(i);
        full.add({name, "factor_of", {"U"}, "", 0, {}, ufull.factors[i].poly.to_multi(ps.v)});
        names.push_back(name);
      }
      std::vector<long> searched;
      const auto hits = cos_battery(full, names, ps.v, searched);
      const bool contained = std::includes(hits.begin(), hits.end(), out.indices.begin(), out.indices.end());
      out.notes.push_back("full route candidate indices {" + join_indices(hits) + "}" +
                          (contained ? ", containing the reduced ones" : ", NOT containing the reduced ones"));
      out.certificate.push_back(scratch[3]);  // T2
      out.certificate.push_back(scratch[4]);  // U
    }
  }
  return out;
}

ObstructionVerdict fast_path_rational_fp(const Rational& trace, const Rational& det) {
  if (trace * trace - Rational(4) * det >= Rational(0)) {
    throw HypothesisFailure("rational fast path needs T^2 - 4D < 0");
  }
  if (det == Rational(1)) throw HypothesisFailure("rational fast path needs D != 1");
  ObstructionVerdict out;
  const Rational r = trace * trace / det;
  // T^2/D = 2 (v + 1) with v = cos(2 pi / p) rational.
  static const std::map<Rational, long> allowed{
      {Rational(0), 2}, {Rational(1), 3}, {Rational(2), 4}, {Rational(3), 6}, {Rational(4), 1}};
  out.searched_indices = {1, 2, 3, 4, 6};
  out.notes.push_back("T^2/D = " + r.str());
  auto it = allowed.find(r);
  if (it == allowed.end()) {
    out.kind = VerdictKind::Excluded;
    out.reason = "T^2/D = " + r.str() + " is not in {0, 1, 2, 3, 4}";
  } else {
    out.kind = VerdictKind::CandidateIndices;
    out.indices = {it->second};
    out.reason = "T^2/D = " + r.str() + " corresponds to p = " + std::to_string(it->second);
  }
  return out;
}

// ---- quadratic surds -------------------------------------------------------

namespace {

QuadSurd normalized(QuadSurd q) {
  Rational root;
  if (q.b.is_zero() || q.s.is_zero()) return {q.a, Rational(0), q.s};
  if (exact_sqrt(q.s, root)) return {q.a + q.b * root, Rational(0), q.s};
  return q;
}

QuadSurd mul(const QuadSurd& x, const QuadSurd& y) {
  const Rational s = x.b.is_zero() ? y.s : x.s;
  if (!x.b.is_zero() && !y.b.is_zero() && x.s != y.s) throw InvalidInput("surds from different fields");
  return normalized({x.a * y.a + x.b * y.b * s, x.a * y.b + x.b * y.a, s});
}

QuadSurd inverse(const QuadSurd& x) {
  const Rational n = x.a * x.a - x.b * x.b * x.s;
  if (n.is_zero()) throw InvalidInput("surd inverse of zero");
  return normalized({x.a / n, -x.b / n, x.s});
}

QuadSurd sub(const QuadSurd& x, const QuadSurd& y) {
  const Rational s = x.b.is_zero() ? y.s : x.s;
  return normalized({x.a - y.a, x.b - y.b, s});
}

}  // namespace

int QuadSurd::sign() const {
  const QuadSurd q = normalized(*this);
  if (q.b.is_zero()) return q.a.sign();
  if (q.a.is_zero()) return q.b.sign();
  if (q.a.sign() == q.b.sign()) return q.a.sign();
  return q.a * q.a > q.b * q.b * q.s ? q.a.sign() : q.b.sign();
}

std::string QuadSurd::str() const {
  const QuadSurd q = normalized(*this);
  if (q.b.is_zero()) return q.a.str();
  return q.a.str() + " + " + q.b.str() + "*sqrt(" + q.s.str() + ")";
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  const QuadSurd p = normalized(x), q = normalized(y);
  if (p.a != q.a) return false;
  if (p.b.is_zero() || q.b.is_zero()) return p.b.is_zero() && q.b.is_zero();
  return p.b.sign() == q.b.sign() && p.b * p.b * p.s == q.b * q.b * q.s;
}

QuadSurd to_quad_surd(const NumberField& field, const QPoly& e) {
  const QPoly r = field.reduce(e);
  if (field.degree() == 1) return {r[0], Rational(0), Rational(1)};
  if (field.degree() != 2) throw InvalidInput("not a quadratic field");
  const QPoly m = field.modulus().monic();
  const Rational p = m[1], q = m[0];
  const Rational disc = p * p - Rational(4) * q;
  // alpha = (-p + sigma sqrt(disc)) / 2, sigma fixed by the chosen root.
  const RealAlgebraic& alpha = field.generator();
  const Rational centre = -p / Rational(2);
  RealAlgebraic a = alpha;
  while (a.interval().contains(centre)) a = a.bisected();
  const int sigma = a.interval().lo > centre ? 1 : -1;
  return normalized({r[0] + r[1] * centre, r[1] * Rational(sigma) / Rational(2), disc});
}

ObstructionVerdict fast_path_quadratic_fp(const QuadSurd& trace, const QuadSurd& det) {
  const QuadSurd four{Rational(4), Rational(0), Rational(1)}, one{Rational(1), Rational(0), Rational(1)};
  if (sub(mul(trace, trace), mul(four, det)).sign() >= 0) {
    throw HypothesisFailure("quadratic fast path needs T^2 - 4D < 0");
  }
  if (det == one) throw HypothesisFailure("quadratic fast path needs D != 1");
  const QuadSurd r = mul(mul(trace, trace), inverse(det));
  ObstructionVerdict out;
  out.notes.push_back("T^2/D = " + r.str());
  const Rational half(1, 2);
  // T^2/D = 2 + 2 cos(2 pi n / p); cosines of degree <= 2 over Q.
  const std::vector<std::pair<QuadSurd, long>> allowed{
      {{Rational(3, 2), half, Rational(5)}, 5},   {{Rational(3, 2), -half, Rational(5)}, 5},
      {{Rational(2), Rational(1), Rational(2)}, 8}, {{Rational(2), Rational(-1), Rational(2)}, 8},
      {{Rational(5, 2), half, Rational(5)}, 10},  {{Rational(5, 2), -half, Rational(5)}, 10},
      {{Rational(2), Rational(1), Rational(3)}, 12}, {{Rational(2), Rational(-1), Rational(3)}, 12},
      {{Rational(0), Rational(0), Rational(1)}, 2}, {{Rational(1), Rational(0), Rational(1)}, 3},
      {{Rational(2), Rational(0), Rational(1)}, 4}, {{Rational(3), Rational(0), Rational(1)}, 6},
      {{Rational(4), Rational(0), Rational(1)}, 1}};
  out.searched_indices = {1, 2, 3, 4, 5, 6, 8, 10, 12};
  for (const auto& [value, p] : allowed) {
    if (r == value) {
      out.kind = VerdictKind::CandidateIndices;
      out.indices = {p};
      out.reason = "T^2/D = " + r.str() + " corresponds to p = " + std::to_string(p);
      return out;
    }
  }
  out.kind = VerdictKind::Excluded;
  out.reason = "T^2/D = " + r.str() + " is none of the admissible values";
  return out;
}

// ---- two integrals ----------------------------------------------------------

TwoIntegralVerdict two_integral_classification(const Rational& b, const Rational& c) {
  TwoIntegralVerdict out;
  const Rational disc = b * b - Rational(4) * c;
  if (disc < Rational(0)) {
    if (c != Rational(1)) {
      out.reason = "complex eigenvalues with c = " + c.str() + " != 1";
      return out;
    }
    const auto test = is_cyclotomic_product(QPoly(std::vector<Rational>{c, b, Rational(1)}));
    out.possible = test.is_product;
    out.reason = test.is_product ? "eigenvalues are roots of unity" : "mu^2 + b mu + 1 is not cyclotomic";
    return out;
  }
  const bool listed = (c == Rational(1) && (b == Rational(2) || b == Rational(-2))) ||
                      (b == Rational(0) && c == Rational(-1));
  out.possible = listed;
  out.reason = listed ? "real eigenvalues in {1, -1}" : "real eigenvalues that are not both +-1";
  return out;
}

std::vector<std::pair<long, long>> power_map_sweep(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long p = -bound; p <= bound; ++p) {
    if (p == 0) continue;
    for (long q = -bound; q <= bound; ++q) {
      // Df(1,1) = [[0, 1], [p, q]]: mu^2 - q mu - p.
      if (two_integral_classification(Rational(-q), Rational(-p)).possible) out.emplace_back(p, q);
    }
  }
  return out;
}

// ---- parameters ---------------------------------------------------------------

bool ParamConstraint::admits(const Rational& x) const {
  switch (op) {
    case Op::Gt:
      return x > value;
    case Op::Ge:
      return x >= value;
    case Op::Lt:
      return x < value;
    case Op::Le:
      return x <= value;
    case Op::Eq:
      return x == value;
    case Op::Ne:
      return x != value;
  }
  return false;
}

std::string ParamConstraint::str() const {
  static const char* names[] = {">", ">=", "<", "<=", "=", "!="};
  return param + " " + names[static_cast<int>(op)] + " " + value.str();
}

ParamConstraint parse_constraint(const std::string& text) {
  static const std::regex re(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(>=|<=|!=|==|=|>|<)\s*([-+]?[0-9]+(?:/[0-9]+)?)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("constraint must look like 'a > 9/8', got '" + text + "'");
  ParamConstraint c;
  c.param = m[1];
  const std::string op = m[2];
  if (op == ">") c.op = ParamConstraint::Op::Gt;
  if (op == ">=") c.op = ParamConstraint::Op::Ge;
  if (op == "<") c.op = ParamConstraint::Op::Lt;
  if (op == "<=") c.op = ParamConstraint::Op::Le;
  if (op == "=" || op == "==") c.op = ParamConstraint::Op::Eq;
  if (op == "!=") c.op = ParamConstraint::Op::Ne;
  std::string value = m[3];
  if (!value.empty() && value[0] == '+') value.erase(0, 1);
  try {
    c.value = Rational::parse(value);
  } catch (const std::exception& e) {
    throw InvalidInput("bad constraint value '" + value + "': " + e.what());
  }
  return c;
}

namespace {

bool admitted(const std::vector<ParamConstraint>& cs, const Rational& x) {
  return std::all_of(cs.begin(), cs.end(), [&](const ParamConstraint& c) { return c.admits(x); });
}

// Whether the open interval strictly between two consecutive bounds can hold
// admitted values; used to decide whether a sign change lies inside the region.
bool root_inside_region(const std::vector<ParamConstraint>& cs, const RealAlgebraic& r) {
  if (auto q = r.rational_value()) return admitted(cs, *q);
  // Irrational roots never hit an Eq/Ne bound; compare with the others.
  RealAlgebraic a = r;
  for (int i = 0; i < 400; ++i) {
    bool decided = true;
    bool inside = true;
    for (const auto& c : cs) {
      const auto& iv = a.interval();
      switch (c.op) {
        case ParamConstraint::Op::Gt:
        case ParamConstraint::Op::Ge:
          if (iv.contains(c.value)) decided = false;
          else if (iv.hi < c.value) inside = false;
          break;
        case ParamConstraint::Op::Lt:
        case ParamConstraint::Op::Le:
          if (iv.contains(c.value)) decided = false;
          else if (iv.lo > c.value) inside = false;
          break;
        case ParamConstraint::Op::Eq:
          inside = false;
          break;
        case ParamConstraint::Op::Ne:
          break;
      }
    }
    if (decided) return inside;
    a = a.bisected();
  }
  return true;
}

bool hits(const RealAlgebraic& r, const Rational& x) {
  if (auto v = r.rational_value()) return *v == x;
  RealAlgebraic a = r;
  while (a.interval().contains(x)) a = a.bisected();
  return false;
}

// A rational point admitted by the constraints and avoiding `avoid`.
Rational sample_point(const std::vector<ParamConstraint>& cs, const std::vector<RealAlgebraic>& avoid) {
  std::optional<Rational> lo, hi;
  for (const auto& c : cs) {
    if (c.op == ParamConstraint::Op::Eq) return c.value;
    if (c.op == ParamConstraint::Op::Gt || c.op == ParamConstraint::Op::Ge) lo = lo ? std::max(*lo, c.value) : c.value;
    if (c.op == ParamConstraint::Op::Lt || c.op == ParamConstraint::Op::Le) hi = hi ? std::min(*hi, c.value) : c.value;
  }
  Rational step(1);
  for (int i = 0; i < 200; ++i, step = step / Rational(2)) {
    Rational x = lo && hi ? *lo + (*hi - *lo) * step / Rational(2) : (lo ? *lo + step : (hi ? *hi - step : step - Rational(1)));
    bool clash = !admitted(cs, x);
    for (const auto& r : avoid) clash = clash || hits(r, x);
    if (!clash) return x;
  }
  throw InvalidInput("could not find a sample point in the parameter region");
}

}  // namespace

ObstructionVerdict planar_parametric(const RationalMap& f, const std::vector<Rational>& fixed_point,
                                     const std::vector<ParamConstraint>& constraints) {
  if (f.dimension() != 2) throw InvalidInput("planar analysis needs a map in two variables");
  if (f.params.size() != 1) throw InvalidInput("planar_parametric needs exactly one parameter");
  if (fixed_point.size() != 2) throw InvalidInput("fixed point must have two coordinates");
  const std::string& a = f.params[0];
  for (const auto& c : constraints) {
    if (c.param != a) throw InvalidInput("constraint on unknown parameter " + c.param);
  }
  ObstructionVerdict out;
  CertificateBuilder cb(out.certificate);
  const FixedPointSystem sys = fixed_point_system(f);
  std::map<std::string, Rational> pt{{f.state_vars[0], fixed_point[0]}, {f.state_vars[1], fixed_point[1]}};
  auto at_point = [&](const MultiPoly& p) {
    MultiPoly r = p;
    for (const auto& [v, x] : pt) r = r.evaluate(v, x);
    return r;
  };
  for (std::size_t i = 0; i < 2; ++i) {
    if (!at_point(sys.equations[i]).is_zero()) throw InvalidInput("point is not fixed for every parameter value");
    if (at_point(sys.nondegeneracy[i]).is_zero()) throw InvalidInput("a denominator vanishes identically at the point");
  }
  const CharPolyData cp = char_poly(f);
  cb.system("Tnum", "Tnum", cp.trace->num());
  cb.system("Tden", "Tden", cp.trace->den());
  cb.system("Dnum", "Dnum", cp.det->num());
  cb.system("Dden", "Dden", cp.det->den());
  for (const char* name : {"Tnum", "Tden", "Dnum", "Dden"}) {
    cb.add({std::string(name) + "@fp", "at_point", {name}, "", 0, fixed_point, at_point(cb.get(name))});
  }
  const MultiPoly t1 = cb.get("Tnum@fp");
  const MultiPoly t2 = cb.get("Tden@fp");
  const MultiPoly d1 = cb.get("Dnum@fp");
  const MultiPoly d2 = cb.get("Dden@fp");
  if (t2.is_zero() || d2.is_zero() || d1.is_zero()) throw InvalidInput("trace or determinant undefined or zero at the point");

  // Hypothesis T^2 - 4D < 0 on the whole region: sign of (T1^2 D2 - 4 T2^2 D1) * D2.
  const MultiPoly disc = (t1 * t1 * d2 - Rational(4) * t2 * t2 * d1) * d2;
  const QPoly disc_q = to_q(disc, a);
  const auto disc_roots = disc_q.is_zero() ? std::vector<RealAlgebraic>{} : sturm_isolate(disc_q);
  for (const auto& r : disc_roots) {
    if (root_inside_region(constraints, r)) {
      out.kind = VerdictKind::Inconclusive;
      out.reason = "hypothesis: T^2 - 4D changes sign inside the parameter region near " + r.str();
      return out;
    }
  }
  const Rational sample = sample_point(constraints, disc_roots);
  if (disc_q.is_zero() || disc_q.evaluate(sample) >= Rational(0)) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = "hypothesis: eigenvalues are not complex on the parameter region";
    return out;
  }
  out.notes.push_back("hypothesis: T^2 - 4D < 0 on the whole region (exact)");

  std::set<Rational> values;
  // |mu| = 1 where D = 1: the hypothesis of the theorem fails there.
  const QPoly dm1 = to_q(d1 - d2, a);
  if (dm1.is_zero()) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = "hypothesis: D = 1 for every parameter value";
    return out;
  }
  for (const auto& r : rational_roots(dm1)) {
    if (!admitted(constraints, r.value)) continue;
    values.insert(r.value);
    out.flagged.emplace_back(r.value, "D = 1: eigenvalues of modulus 1, the obstruction does not apply");
  }
  // T^2/D = r for r in {0, 1, 2, 3, 4}.
  for (long r = 0; r <= 4; ++r) {
    const MultiPoly cond = cb.add({"C" + std::to_string(r), "cos_condition", {"Tnum@fp", "Tden@fp", "Dnum@fp", "Dden@fp"},
                                    "", r, {}, t1 * t1 * d2 - Rational(r) * t2 * t2 * d1});
    if (cond.is_zero()) {
      out.kind = VerdictKind::Inconclusive;
      out.reason = "T^2/D = " + std::to_string(r) + " for every parameter value";
      return out;
    }
    const QPoly cq = to_q(cond, a);
    if (cq.degree() < 1) continue;
    for (const auto& root : rational_roots(cq)) {
      const Rational& x = root.value;
      if (!admitted(constraints, x)) continue;
      if (to_q(d2, a).evaluate(x).is_zero() || to_q(t2, a).evaluate(x).is_zero()) continue;
      values.insert(x);
    }
  }
  out.params.assign(values.begin(), values.end());
  out.raw_candidates = out.params;
  out.searched_indices = {1, 2, 3, 4, 6};
  out.kind = out.params.empty() ? VerdictKind::Excluded : VerdictKind::CandidateParams;
  out.reason = out.params.empty() ? "no admitted parameter value satisfies T^2/D in {0, 1, 2, 3, 4}"
                                  : "candidates {" + join_rationals(out.params) + "}";
  // Each candidate re-run through the non-parametric pipeline.
  for (const auto& x : out.params) {
    const RationalMap g = f.specialize({{a, x}});
    const auto v = planar_pipeline(g, AlgebraicPoint::rational(g.state_vars, fixed_point), {false, false, 6});
    out.notes.push_back(a + " = " + x.str() + ": specialized pipeline says " + to_string(v.kind) +
                        (v.kind == VerdictKind::Inconclusive ? " (" + v.reason + ")" : ""));
    if (v.kind == VerdictKind::Excluded) throw InvariantViolation("specialized pipeline excludes a candidate");
  }
  return out;
}

// ---- n dimensions ----------------------------------------------------------

NdimElimination ndim_eliminate(const RationalMap& f) {
  NdimElimination out;
  CertificateBuilder cb(out.certificate);
  const FixedPointSystem sys = fixed_point_system(f);
  const CharPolyData cp = char_poly(f);
  out.mu = cp.eigen_var;
  std::vector<std::string> eqs;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    const std::string name = "S" + std::to_string(i + 1);
    cb.system(name, name, sys.equations[i]);
    eqs.push_back(name);
  }
  cb.system("R", "R", cp.numerator);
  std::string r_name = "R";
  std::vector<std::string> vars = f.state_vars;
  int stage = 0;

  auto depends_on_state = [&](const MultiPoly& p) {
    return std::any_of(vars.begin(), vars.end(), [&](const std::string& v) { return p.depends_on(v); });
  };
  auto check_equations = [&]() -> bool {
    for (auto it = eqs.begin(); it != eqs.end();) {
      const MultiPoly p = cb.get(*it);
      if (p.is_zero()) {
        out.failure = "continuum of fixed points: " + *it + " vanishes identically";
        return false;
      }
      if (!depends_on_state(p)) {
        if (p.is_constant()) {
          out.failure = "no fixed points: " + *it + " is a nonzero constant";
          return false;
        }
        it = eqs.erase(it);  // a condition on the parameters alone
        continue;
      }
      ++it;
    }
    return true;
  };
  if (!check_equations()) return out;

  // Linear substitutions x_j = ... with constant coefficient, last variables first.
  auto substitute_one = [&]() {
    for (auto v = vars.rbegin(); v != vars.rend(); ++v) {
      for (const auto& e : eqs) {
        const MultiPoly p = cb.get(e);
        if (p.degree(*v) != 1 || !p.coefficient(*v, 1).is_constant()) continue;
        const std::string var = *v, source = e;
        const std::string sol = "sol_" + var;
        const MultiPoly c = p.coefficient(var, 1);
        cb.add({sol, "solve_linear", {source}, var, 0, {},
                (p - c * MultiPoly::variable(var)) * (Rational(-1) / c.constant_value())});
        std::vector<std::string> next;
        for (const auto& other : eqs) {
          if (other == source) continue;
          const std::string name = other + "'";
          cb.add({name, "substitute", {other, sol}, var, 0, {}, cb.get(other).substitute(var, cb.get(sol))});
          next.push_back(name);
        }
        const std::string rn = r_name + "'";
        cb.add({rn, "substitute", {r_name, sol}, var, 0, {}, cb.get(r_name).substitute(var, cb.get(sol))});
        r_name = rn;
        eqs = next;
        vars.erase(std::find(vars.begin(), vars.end(), var));
        ++stage;
        return true;
      }
    }
    return false;
  };
  while (substitute_one()) {
    if (!check_equations()) return out;
  }

  // Successive resultants for the remaining state variables.
  while (!vars.empty()) {
    const std::string var = vars.back();
    std::string pivot;
    for (const auto& e : eqs) {
      const int d = cb.get(e).degree(var);
      if (d > 0 && (pivot.empty() || d < cb.get(pivot).degree(var))) pivot = e;
    }
    if (pivot.empty()) {
      out.failure = "continuum of fixed points: " + var + " is unconstrained";
      return out;
    }
    ++stage;
    std::vector<std::string> next;
    for (const auto& e : eqs) {
      if (e == pivot) continue;
      if (!cb.get(e).depends_on(var)) {
        next.push_back(e);
        continue;
      }
      const std::string name = "E" + std::to_string(stage) + "_" + e;
      cb.resultant_of(name, pivot, e, var);
      next.push_back(name);
    }
    const std::string rn = "R" + std::to_string(stage);
    if (cb.get(r_name).depends_on(var)) {
      cb.resultant_of(rn, pivot, r_name, var);
      r_name = rn;
    }
    if (cb.get(r_name).is_zero()) {
      out.failure = "elimination collapse at stage " + std::to_string(stage) + " (eliminating " + var + ")";
      return out;
    }
    eqs = next;
    vars.pop_back();
    if (!check_equations()) return out;
  }

  MultiPoly p = cb.get(r_name);
  if (p.is_zero() || p.degree(out.mu) < 1) {
    out.failure = "elimination collapse: no polynomial in " + out.mu + " remains";
    return out;
  }
  if (!f.params.empty()) {
    cb.add({"content", "content", {r_name}, out.mu, 0, {}, content_in(p, out.mu)});
    out.content = cb.get("content");
    cb.add({"P0", "divide", {r_name, "content"}, "", 0, {}, exact_divide(p, out.content)});
  } else {
    out.content = MultiPoly(1);
    cb.add({"P0", "primitive", {r_name}, "", 0, {}, p.primitive()});
  }
  std::string current = "P0";
  for (long d : indices_with_degree_at_most(cb.get(current).degree(out.mu)).indices) {
    const MultiPoly phi = cyclotomic_poly(d).to_multi(out.mu);
    while (cb.get(current).degree(out.mu) >= phi.degree(out.mu)) {
      auto q = try_divide(cb.get(current), phi);
      if (!q) break;
      const std::string phi_name = "Phi_" + std::to_string(d);
      cb.add({phi_name, "cyclotomic", {}, out.mu, d, {}, phi});
      const std::string next = "P" + std::to_string(out.split_cyclotomic.size() + 1);
      cb.add({next, "divide", {current, phi_name}, "", 0, {}, *q});
      current = next;
      out.split_cyclotomic.push_back(d);
    }
  }
  cb.add({"P", "primitive", {current}, "", 0, {}, cb.get(current).primitive()});
  out.eliminant = cb.get("P");
  return out;
}

ObstructionVerdict parametric_candidates(const MultiPoly& p, const std::string& mu, const std::string& param,
                                         const std::vector<ParamConstraint>& constraints) {
  ObstructionVerdict out;
  CertificateBuilder cb(out.certificate);
  cb.add({"P", "primitive", {}, "", 0, {}, p});
  out.certificate.back().op = "given";
  const int k = p.degree(mu);
  if (k < 1) throw InvalidInput("parametric_candidates needs a polynomial of positive degree in " + mu);
  out.searched_indices = indices_with_degree_at_most(k).indices;
  std::set<Rational> raw;
  for (long j : out.searched_indices) {
    const std::string phi = "Phi_" + std::to_string(j);
    cb.add({phi, "cyclotomic", {}, mu, j, {}, cyclotomic_poly(j).to_multi(mu)});
    const MultiPoly r = cb.resultant_of("Res(P," + phi + ")", "P", phi, mu);
    if (r.is_zero()) {
      out.notes.push_back("Res(P, Phi_" + std::to_string(j) + ") vanishes for every value of " + param);
      out.kind = VerdictKind::Inconclusive;
      out.reason = "Phi_" + std::to_string(j) + " divides P for all parameter values";
      continue;
    }
    const QPoly rq = to_q(r, param);
    if (rq.degree() < 1) continue;
    std::vector<Rational> hit;
    for (const auto& root : rational_roots(rq)) {
      if (!admitted(constraints, root.value)) continue;
      raw.insert(root.value);
      hit.push_back(root.value);
    }
    if (!hit.empty()) out.notes.push_back("p = " + std::to_string(j) + ": " + param + " in {" + join_rationals(hit) + "}");
  }
  out.raw_candidates.assign(raw.begin(), raw.end());
  if (out.kind == VerdictKind::Inconclusive && !out.reason.empty()) return out;
  for (const auto& x : out.raw_candidates) {
    const QPoly px = to_q(p.evaluate(param, x), mu);
    if (px.is_zero()) {
      out.flagged.emplace_back(x, "P vanishes identically");
      out.params.push_back(x);
      continue;
    }
    if (px.degree() < 1 || is_cyclotomic_product(px).is_product) {
      out.params.push_back(x);
    } else {
      out.notes.push_back(param + " = " + x.str() + " discarded: P has a root that is not a root of unity");
    }
  }
  out.kind = out.params.empty() ? VerdictKind::Excluded : VerdictKind::CandidateParams;
  out.reason = out.params.empty() ? "no rational parameter value survives"
                                  : "survivors {" + join_rationals(out.params) + "}";
  return out;
}

ObstructionVerdict ndim_pipeline(const RationalMap& f, const NdimOptions& options) {
  ObstructionVerdict out;
  const NdimElimination el = ndim_eliminate(f);
  out.certificate = el.certificate;
  if (el.failure) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = *el.failure;
    return out;
  }
  if (!el.split_cyclotomic.empty()) {
    std::vector<long> ds = el.split_cyclotomic;
    out.notes.push_back("split off cyclotomic factors Phi_d(" + el.mu + ") for d in {" + join_indices(ds) + "}");
  }
  const MultiPoly& p = el.eliminant;
  CertificateBuilder cb(out.certificate);
  if (f.params.empty()) {
    if (p.degree(el.mu) < 1) {
      out.kind = VerdictKind::CandidateIndices;
      out.indices = el.split_cyclotomic;
      out.reason = "every eigenvalue is a root of unity";
      return out;
    }
    out.searched_indices = indices_with_degree_at_most(p.degree(el.mu)).indices;
    for (long j : out.searched_indices) {
      const std::string phi = "Phi_" + std::to_string(j);
      cb.add({phi, "cyclotomic", {}, el.mu, j, {}, cyclotomic_poly(j).to_multi(el.mu)});
      if (cb.resultant_of("Res(P," + phi + ")", "P", phi, el.mu).is_zero()) out.indices.push_back(j);
    }
    out.kind = out.indices.empty() ? VerdictKind::Excluded : VerdictKind::CandidateIndices;
    out.reason = out.indices.empty() ? "P shares no root with any Phi_j, j in {" + join_indices(out.searched_indices) + "}"
                                     : "Res(P, Phi_j) = 0 for j in {" + join_indices(out.indices) + "}";
    return out;
  }
  if (f.params.size() > 1) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = "more than one parameter: candidate sets are the root sets of Res(P, Phi_j)";
    return out;
  }
  const std::string& a = f.params[0];
  ObstructionVerdict pc = parametric_candidates(p, el.mu, a, options.constraints);
  for (const auto& e : pc.certificate) {
    if (e.op != "given") out.certificate.push_back(e);
  }
  out.kind = pc.kind;
  out.params = pc.params;
  out.raw_candidates = pc.raw_candidates;
  out.flagged = pc.flagged;
  out.reason = pc.reason;
  out.searched_indices = pc.searched_indices;
  out.notes.insert(out.notes.end(), pc.notes.begin(), pc.notes.end());
  // Parameter values where the removed content vanishes are not decided here.
  const QPoly content = to_q(el.content, a);
  if (content.degree() >= 1) {
    for (const auto& r : rational_roots(content)) {
      if (!admitted(options.constraints, r.value)) continue;
      out.flagged.emplace_back(r.value, "the eliminant vanishes identically; not decided");
    }
  }
  if (options.confirm_specializations) {
    for (const auto& x : out.params) {
      const RationalMap g = f.specialize({{a, x}});
      const auto v = ndim_pipeline(g, {});
      out.notes.push_back(a + " = " + x.str() + ": specialized pipeline says " + to_string(v.kind));
      if (v.kind == VerdictKind::Excluded) throw InvariantViolation("specialized pipeline excludes a candidate");
    }
  }
  return out;
}

}  // namespace resint
