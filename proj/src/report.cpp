#include "resint/report.hpp"

#include <algorithm>
#include <set>

#include "resint/errors.hpp"
#include "resint/fixed_points.hpp"

namespace resint {

Json report_header(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = "resint";
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Json to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.compacted().variables();
  j["poly"] = p.str();
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  const auto vars = j.at("vars").get<std::vector<std::string>>();
  const RationalFunction r = parse_expression(j.at("poly").get<std::string>(), vars);
  if (!r.is_polynomial()) throw InvalidInput("certificate value is not a polynomial");
  return r.num() * (Rational(1) / r.den().constant_value());
}

Json to_json(const Certificate& c) {
  Json arr = Json::array();
  for (const auto& e : c) {
    Json j;
    j["name"] = e.name;
    j["op"] = e.op;
    j["args"] = e.args;
    if (!e.var.empty()) j["var"] = e.var;
    if (e.index != 0) j["index"] = e.index;
    if (!e.coords.empty()) {
      Json cs = Json::array();
      for (const auto& x : e.coords) cs.push_back(x.str());
      j["coords"] = cs;
    }
    j["value"] = to_json(e.value);
    arr.push_back(j);
  }
  return arr;
}

Certificate certificate_from_json(const Json& j) {
  Certificate out;
  for (const auto& e : j) {
    CertificateEntry c;
    c.name = e.at("name").get<std::string>();
    c.op = e.at("op").get<std::string>();
    c.args = e.at("args").get<std::vector<std::string>>();
    c.var = e.value("var", std::string());
    c.index = e.value("index", 0L);
    if (e.contains("coords")) {
      for (const auto& x : e["coords"]) c.coords.push_back(Rational::parse(x.get<std::string>()));
    }
    c.value = poly_from_json(e.at("value"));
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string big_str(const BigFloat& x) { return x.str(20, std::ios_base::scientific); }

}  // namespace

Json to_json(const ObstructionVerdict& v, bool with_certificate) {
  Json j;
  j["kind"] = to_string(v.kind);
  if (v.kind == VerdictKind::CandidateParams) j["params"] = rationals(v.params);
  if (v.kind == VerdictKind::CandidateIndices) j["indices"] = v.indices;
  j["reason"] = v.reason;
  j["searched_indices"] = v.searched_indices;
  if (!v.raw_candidates.empty()) j["raw_candidates"] = rationals(v.raw_candidates);
  if (!v.flagged.empty()) {
    Json f = Json::array();
    for (const auto& [x, why] : v.flagged) f.push_back({{"value", x.str()}, {"note", why}});
    j["flagged"] = f;
  }
  j["notes"] = v.notes;
  // Nonzero battery resultants are always listed; full trails on request.
  Json battery = Json::array();
  for (const auto& e : v.certificate) {
    if (e.op == "resultant" && e.name.rfind("Res(", 0) == 0) {
      battery.push_back({{"name", e.name}, {"zero", e.value.is_zero()}, {"value", e.value.str()}});
    }
  }
  j["resultants"] = battery;
  if (with_certificate) j["certificate"] = to_json(v.certificate);
  return j;
}

Json to_json(const AlgebraicPoint& p) {
  Json j;
  Json coords = Json::array();
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const RealAlgebraic c = p.coordinate(i);
    coords.push_back({{"var", p.vars[i]}, {"exact", c.str()}, {"approx", c.to_double()}});
  }
  j["coordinates"] = coords;
  if (!p.is_rational()) j["field_modulus"] = p.field.modulus().str("t");
  return j;
}

Json to_json(const FixedPointReport& r) {
  Json j;
  j["trace"] = r.point.field.real_value(r.trace).str();
  j["det"] = r.point.field.real_value(r.det).str();
  j["disc_sign"] = r.disc_sign;
  j["det_minus_one_sign"] = r.det_minus_one;
  j["hypotheses_hold"] = r.hypotheses_hold();
  j["checks"] = r.hypothesis_checks;
  return j;
}

Json to_json(const ResonanceLattice& l) {
  Json j;
  j["rank"] = l.rank;
  j["status"] = to_string(l.status);
  Json basis = Json::array();
  for (const auto& row : l.basis) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    basis.push_back(r);
  }
  j["basis"] = basis;
  if (l.search_bound) j["search_bound"] = l.search_bound;
  j["method"] = l.method;
  j["notes"] = l.notes;
  return j;
}

Json to_json(const Theorem1Bound& b) {
  Json j;
  j["bound"] = b.bound;
  j["eigen_structure"] = b.eigen_structure;
  Json eig = Json::array();
  for (const auto& e : b.eigenvalues) {
    eig.push_back({{"poly", e.poly.str("mu")}, {"re", big_str(e.approx.re)}, {"im", big_str(e.approx.im)}});
  }
  j["eigenvalues"] = eig;
  j["lattice"] = to_json(b.lattice);
  return j;
}

Json to_json(const IntegralCheck& c) {
  Json j;
  j["holds"] = c.holds;
  if (!c.holds) j["residual"] = c.residual.str();
  return j;
}

Json to_json(const IndependenceReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  j["seed"] = r.seed;
  j["attempts"] = r.attempts;
  if (!r.witness.empty()) {
    Json w;
    for (const auto& [k, v] : r.witness) w[k] = v.str();
    j["witness"] = w;
  }
  return j;
}

Json to_json(const OrbitCheck& o) {
  Json j;
  j["steps_done"] = o.steps_done;
  j["max_deviation"] = o.max_deviation;
  if (o.exact_max_deviation) j["exact_max_deviation"] = o.exact_max_deviation->str();
  if (o.pole_step) {
    j["pole_step"] = *o.pole_step;
    j["message"] = o.message;
  }
  return j;
}

std::string canonical_dump(const Json& report) {
  Json copy = report;
  copy.erase("timing");
  return copy.dump(2);
}

// ---- analysis ---------------------------------------------------------------

namespace {

bool point_matches(const AlgebraicPoint& p, const std::vector<Rational>& want) {
  const auto rc = p.rational_coords();
  return rc && *rc == want;
}

Json run_resonance(const RationalMap& f, const AlgebraicPoint& p, int bound) {
  try {
    return to_json(theorem1_bound(f, p, bound));
  } catch (const Error& e) {
    return Json{{"error", e.what()}};
  }
}

// Pipelines at one fixed point of a parameter-free planar map.
ObstructionVerdict planar_at(const RationalMap& f, const AlgebraicPoint& p, const AnalyzeOptions& o, Json& j) {
  const FixedPointReport rep = planar_fixed_point_report(f, p);
  j["hypotheses"] = to_json(rep);
  if (rep.hypotheses_hold()) {
    try {
      std::optional<ObstructionVerdict> fast;
      if (p.is_rational()) {
        fast = fast_path_rational_fp(rep.trace[0], rep.det[0]);
      } else if (p.field.degree() == 2) {
        fast = fast_path_quadratic_fp(to_quad_surd(p.field, rep.trace), to_quad_surd(p.field, rep.det));
      }
      if (fast) j["fast_path"] = to_json(*fast, false);
    } catch (const Error& e) {
      j["fast_path"] = Json{{"error", e.what()}};
    }
  }
  PlanarOptions po;
  po.factor_budget = o.factor_budget;
  po.full_route = false;
  return planar_pipeline(f, p, po);
}

}  // namespace

AnalyzeResult analyze_map(const RationalMap& f, const AnalyzeOptions& o) {
  AnalyzeResult out;
  Json& r = out.report;
  r = Json::object();
  r["map"] = f.render();
  Json cons = Json::array();
  for (const auto& c : o.constraints) {
    if (std::find(f.params.begin(), f.params.end(), c.param) == f.params.end()) {
      throw InvalidInput("constraint on undeclared parameter " + c.param);
    }
    cons.push_back(c.str());
  }
  r["constraints"] = cons;
  r["bound"] = o.bound;
  Json fps = Json::array();
  std::vector<ObstructionVerdict> verdicts;

  if (f.params.empty() && f.dimension() == 2) {
    const PlanarElimination el = eliminate_fixed_points(fixed_point_system(f));
    if (el.degenerate) r["diagnostic"] = el.diagnostic;
    for (const auto& u : el.unresolved) r["unresolved"].push_back(u);
    for (const auto& p : el.real_fixed_points) {
      if (o.fixed_point && !point_matches(p, *o.fixed_point)) continue;
      Json j;
      j["point"] = to_json(p);
      j["resonance"] = run_resonance(f, p, o.bound);
      try {
        verdicts.push_back(planar_at(f, p, o, j));
        j["verdict"] = to_json(verdicts.back(), o.with_certificate);
      } catch (const Error& e) {
        j["error"] = e.what();
      }
      fps.push_back(j);
    }
  } else if (f.params.size() == 1 && f.dimension() == 2) {
    for (const auto& p : parameter_free_rational_fixed_points(f)) {
      if (o.fixed_point && p != *o.fixed_point) continue;
      Json j;
      j["point"] = rationals(p);
      try {
        verdicts.push_back(planar_parametric(f, p, o.constraints));
        j["verdict"] = to_json(verdicts.back(), o.with_certificate);
      } catch (const Error& e) {
        j["error"] = e.what();
      }
      fps.push_back(j);
    }
  } else {
    // Global elimination over all fixed points.
    Json j;
    j["point"] = "all fixed points (elimination)";
    try {
      NdimOptions no;
      no.constraints = o.constraints;
      verdicts.push_back(ndim_pipeline(f, no));
      j["verdict"] = to_json(verdicts.back(), o.with_certificate);
    } catch (const Error& e) {
      j["error"] = e.what();
    }
    fps.push_back(j);
    if (f.params.empty()) {
      for (const auto& p : real_fixed_points(f)) {
        if (o.fixed_point && !point_matches(p, *o.fixed_point)) continue;
        fps.push_back({{"point", to_json(p)}, {"resonance", run_resonance(f, p, o.bound)}});
      }
    }
  }
  r["fixed_points"] = fps;

  // Aggregation.
  std::optional<std::set<Rational>> params;
  bool any_indices = false;
  for (const auto& v : verdicts) {
    if (v.kind == VerdictKind::Excluded) {
      out.overall = VerdictKind::Excluded;
      break;
    }
    if (v.kind == VerdictKind::CandidateIndices) any_indices = true;
    if (v.kind == VerdictKind::CandidateParams) {
      std::set<Rational> s(v.params.begin(), v.params.end());
      if (!params) {
        params = s;
      } else {
        std::set<Rational> both;
        std::set_intersection(params->begin(), params->end(), s.begin(), s.end(), std::inserter(both, both.end()));
        params = both;
      }
    }
  }
  if (out.overall != VerdictKind::Excluded) {
    if (params) {
      out.params.assign(params->begin(), params->end());
      out.overall = out.params.empty() ? VerdictKind::Excluded : VerdictKind::CandidateParams;
    } else if (any_indices) {
      out.overall = VerdictKind::CandidateIndices;
    }
  }
  Json overall;
  overall["kind"] = to_string(out.overall);
  if (out.overall == VerdictKind::CandidateParams) overall["params"] = rationals(out.params);
  r["overall"] = overall;
  return out;
}

}  // namespace resint
