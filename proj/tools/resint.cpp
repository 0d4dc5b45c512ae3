#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/fixed_points.hpp"
#include "resint/paper_suite.hpp"
#include "resint/report.hpp"

#ifndef RESINT_MAPS_DIR
#define RESINT_MAPS_DIR "maps"
#endif

using namespace resint;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

RationalMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" ("));
    item.erase(item.find_last_not_of(" )") + 1);
    if (item.empty()) throw InvalidInput("empty coordinate in point '" + text + "'");
    out.push_back(Rational::parse(item));
  }
  return out;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& items, const RationalMap& f) {
  std::map<std::string, Rational> out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw InvalidInput("parameter value must look like a=3/2, got " + it);
    std::string name = it.substr(0, eq), value = it.substr(eq + 1);
    name.erase(name.find_last_not_of(' ') + 1);
    value.erase(0, value.find_first_not_of(' '));
    if (std::find(f.params.begin(), f.params.end(), name) == f.params.end()) {
      throw InvalidInput("map has no parameter " + name);
    }
    out[name] = Rational::parse(value);
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Json& report, bool json, const std::string& text) {
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict_text(const Json& v) {
  std::string s = v.value("kind", std::string("?"));
  if (v.contains("params")) {
    s += " {";
    bool first = true;
    for (const auto& p : v["params"]) {
      s += (first ? "" : ", ") + p.get<std::string>();
      first = false;
    }
    s += "}";
  }
  if (v.contains("indices")) s += " p in " + v["indices"].dump();
  if (v.contains("reason")) s += ": " + v["reason"].get<std::string>();
  return s;
}

std::string point_text(const Json& p) {
  if (p.is_string()) return p.get<std::string>();
  if (p.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get<std::string>();
    return s + ")";
  }
  std::string s = "(";
  const auto& cs = p["coordinates"];
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i]["exact"].get<std::string>();
  s += ")";
  if (p.contains("field_modulus")) {
    std::ostringstream approx;
    approx << " ~ (";
    for (std::size_t i = 0; i < cs.size(); ++i) approx << (i ? ", " : "") << cs[i]["approx"].get<double>();
    s += approx.str() + ")";
  }
  return s;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& constraints, int bound, int budget,
                bool json, bool certificate, const std::string& fixed_point, const std::vector<std::string>& params,
                const std::string& expect) {
  const auto t0 = std::chrono::steady_clock::now();
  RationalMap f = load_map(path);
  if (!params.empty()) f = f.specialize(parse_params(params, f));
  AnalyzeOptions o;
  for (const auto& c : constraints) o.constraints.push_back(parse_constraint(c));
  o.bound = bound;
  o.factor_budget = budget;
  o.with_certificate = certificate;
  if (!fixed_point.empty()) o.fixed_point = parse_point(fixed_point);
  AnalyzeResult res = analyze_map(f, o);
  Json report = report_header("analyze");
  report["input"] = path;
  for (auto& [k, v] : res.report.items()) report[k] = v;
  report["timing"] = {{"seconds", seconds_since(t0)}};

  std::ostringstream text;
  text << "map: " << path << "\n";
  for (const auto& fp : report["fixed_points"]) {
    text << "fixed point: " << point_text(fp["point"]) << "\n";
    if (fp.contains("hypotheses")) {
      for (const auto& c : fp["hypotheses"]["checks"]) text << "  hypothesis " << c.get<std::string>() << "\n";
    }
    if (fp.contains("resonance")) {
      if (fp["resonance"].contains("bound")) {
        text << "  resonance bound: " << fp["resonance"]["bound"] << " (" << fp["resonance"]["lattice"]["status"].get<std::string>()
             << ")\n";
      } else {
        text << "  resonance: " << fp["resonance"]["error"].get<std::string>() << "\n";
      }
    }
    if (fp.contains("fast_path")) text << "  fast path: " << verdict_text(fp["fast_path"]) << "\n";
    if (fp.contains("verdict")) {
      text << "  verdict: " << verdict_text(fp["verdict"]) << "\n";
      for (const auto& r : fp["verdict"]["resultants"]) {
        text << "    " << r["name"].get<std::string>() << (r["zero"].get<bool>() ? " = 0" : " != 0") << "\n";
      }
      for (const auto& n : fp["verdict"]["notes"]) text << "    note: " << n.get<std::string>() << "\n";
    }
    if (fp.contains("error")) text << "  error: " << fp["error"].get<std::string>() << "\n";
  }
  if (report.contains("diagnostic")) text << "diagnostic: " << report["diagnostic"].get<std::string>() << "\n";
  text << "overall: " << verdict_text(report["overall"]) << "\n";
  emit(report, json, text.str());
  if (!expect.empty() && to_string(res.overall) != expect) {
    std::cerr << "expected " << expect << ", got " << to_string(res.overall) << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& integrals, const std::string& orbit,
               unsigned steps, const std::vector<std::string>& params, bool json, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const RationalMap f = load_map(path);
  const auto values = parse_params(params, f);
  Json report = report_header("verify");
  report["input"] = path;
  report["map"] = f.render();
  std::ostringstream text;
  std::vector<RationalFunction> rs;
  Json list = Json::array();
  bool all = true;
  for (const auto& s : integrals) {
    const RationalFunction r = parse_expression(s, f.all_variables());
    rs.push_back(r);
    const auto chk = verify_first_integral(f, r);
    all = all && chk.holds;
    Json j = to_json(chk);
    j["integral"] = s;
    text << s << ": " << (chk.holds ? "first integral" : "NOT a first integral") << "\n";
    if (!chk.holds) text << "  residual: " << chk.residual.str() << "\n";
    if (!orbit.empty()) {
      const auto start = parse_point(orbit);
      const auto num = orbit_invariance_numeric(f, r, start, steps, values);
      const auto ex = orbit_invariance_exact(f, r, start, steps, values);
      j["orbit"] = {{"numeric", to_json(num)}, {"exact", to_json(ex)}};
      text << "  orbit from " << orbit << ", " << steps << " steps: max deviation " << num.max_deviation
           << " (float), " << (ex.exact_max_deviation ? ex.exact_max_deviation->str() : "n/a") << " (exact)\n";
      if (ex.pole_step) text << "  " << ex.message << "\n";
    }
    list.push_back(j);
  }
  report["integrals"] = list;
  const auto ind = functional_independence(f.state_vars, rs, f.params, seed);
  report["independence"] = to_json(ind);
  text << "independence: " << to_string(ind.verdict) << " (" << ind.method << ", seed " << ind.seed << ")\n";
  report["timing"] = {{"seconds", seconds_since(t0)}};
  emit(report, json, text.str());
  return all ? kOk : kMismatch;
}

int cmd_resonance(const std::string& path, const std::string& fixed_point, const std::vector<std::string>& params,
                  int bound, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  RationalMap f = load_map(path);
  if (!params.empty()) f = f.specialize(parse_params(params, f));
  if (!f.params.empty()) throw InvalidInput("resonance needs values for every parameter (use --param)");
  std::vector<AlgebraicPoint> pts;
  if (!fixed_point.empty()) {
    pts.push_back(AlgebraicPoint::rational(f.state_vars, parse_point(fixed_point)));
  } else {
    pts = real_fixed_points(f);
  }
  Json report = report_header("resonance");
  report["input"] = path;
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& p : pts) {
    Json j;
    j["point"] = to_json(p);
    text << "fixed point " << p.str() << "\n";
    try {
      const auto b = theorem1_bound(f, p, bound);
      j["result"] = to_json(b);
      text << "  eigenvalues (" << b.eigen_structure << "), lattice rank " << b.lattice.rank << " ["
           << to_string(b.lattice.status) << "], at most " << b.bound << " independent first integrals\n";
      for (const auto& row : b.lattice.basis) {
        text << "  k =";
        for (const auto& x : row) text << " " << x.get_str();
        text << "\n";
      }
    } catch (const HypothesisFailure& e) {
      j["error"] = e.what();
      text << "  hypothesis failure: " << e.what() << "\n";
    }
    list.push_back(j);
  }
  report["fixed_points"] = list;
  report["timing"] = {{"seconds", seconds_since(t0)}};
  emit(report, json, text.str());
  return kOk;
}

int cmd_cyclo(long p, long cos_deg, bool json) {
  Json report = report_header("cyclo");
  std::ostringstream text;
  if (p > 0) {
    const auto& m = min_poly_cos(p);
    report["p"] = p;
    report["cyclotomic"] = cyclotomic_poly(p).str("x");
    report["totient"] = totient(p);
    report["min_poly_cos"] = m.poly.str("v");
    text << "Phi_" << p << "(x) = " << cyclotomic_poly(p).str("x") << "\n";
    text << "minimal polynomial of cos(2 pi/" << p << "): " << m.poly.str("v") << "\n";
  } else {
    const auto set = indices_with_cos_degree_at_most(cos_deg);
    report["cos_degree"] = cos_deg;
    Json rows = Json::array();
    for (long n : set.indices) {
      rows.push_back({{"p", n}, {"degree", cos_degree(n)}, {"min_poly_cos", min_poly_cos(n).poly.str("v")}});
      text << "p = " << n << " (degree " << cos_degree(n) << "): " << min_poly_cos(n).poly.str("v") << "\n";
    }
    report["indices"] = rows;
  }
  emit(report, json, text.str());
  return kOk;
}

int cmd_reproduce(const std::string& maps_dir, const std::string& corrupt, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  auto res = reproduce_paper(maps_dir, corrupt.empty() ? std::nullopt : std::optional<std::string>(corrupt));
  res.report["timing"] = {{"seconds", seconds_since(t0)}};
  std::ostringstream text;
  int passed = 0;
  for (const auto& c : res.checks) {
    passed += c.pass;
    text << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << "\n";
    if (!c.pass) text << "  expected: " << c.expected << "\n  actual:   " << c.actual << "\n";
  }
  text << (res.pass ? "PASS" : "FAIL") << " (" << passed << "/" << res.checks.size() << " golden checks)\n";
  emit(res.report, json, text.str());
  return res.pass ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resint: resonance obstructions to first integrals of rational maps"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  std::string file, fixed_point, expect, orbit, corrupt, maps_dir = RESINT_MAPS_DIR;
  std::vector<std::string> constraints, params, integrals;
  int bound = kDefaultExponentBound, budget = 6;
  bool certificate = false;
  unsigned steps = 100;
  long p = 0, cos_deg = -1;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "obstruction analysis at every certified fixed point");
  analyze->add_option("file", file, "map file")->required();
  analyze->add_option("--param-constraint", constraints, "e.g. 'a > 9/8'");
  analyze->add_option("--param", params, "fix a parameter, e.g. a=3/2");
  analyze->add_option("--bound", bound, "exponent bound for resonance search")->check(CLI::Range(1, 200));
  analyze->add_option("--factor-budget", budget, "degree budget of the factor search")->check(CLI::Range(1, 20));
  analyze->add_option("--fixed-point", fixed_point, "restrict to a rational fixed point, e.g. 1,1");
  analyze->add_option("--expect", expect, "exit 1 unless the overall verdict is this kind")
      ->check(CLI::IsMember({"Excluded", "CandidateParams", "CandidateIndices", "Inconclusive"}));
  analyze->add_flag("--certificate", certificate, "embed the full polynomial trail");
  analyze->add_flag("--json", json, "machine-readable report");

  auto* verify = app.add_subcommand("verify", "check candidate first integrals");
  verify->add_option("file", file, "map file")->required();
  verify->add_option("--integral", integrals, "candidate integral")->required();
  verify->add_option("--orbit", orbit, "start point for the orbit check, e.g. 2,3");
  verify->add_option("--steps", steps, "orbit length")->check(CLI::Range(1u, 100000u));
  verify->add_option("--param", params, "parameter values for the orbit check, e.g. a=1");
  verify->add_option("--seed", seed, "seed of the independence test");
  verify->add_flag("--json", json, "machine-readable report");

  auto* resonance = app.add_subcommand("resonance", "resonance lattice and integral bound at fixed points");
  resonance->add_option("file", file, "map file")->required();
  resonance->add_option("--fixed-point", fixed_point, "rational fixed point, e.g. 0,0,0");
  resonance->add_option("--param", params, "parameter values, e.g. a=3");
  resonance->add_option("--bound", bound, "exponent bound for the heuristic search")->check(CLI::Range(1, 200));
  resonance->add_flag("--json", json, "machine-readable report");

  auto* cyclo = app.add_subcommand("cyclo", "cyclotomic and cosine minimal polynomial tables");
  auto* popt = cyclo->add_option("--p", p, "index p")->check(CLI::Range(1L, 100000L));
  auto* copt = cyclo->add_option("--cos-degree", cos_deg, "all p with cos(2 pi/p) of degree <= k")
                   ->check(CLI::Range(1L, 40L));
  popt->excludes(copt);
  cyclo->add_flag("--json", json, "machine-readable report");

  auto* reproduce = app.add_subcommand("reproduce-paper", "run every worked example against golden values");
  reproduce->add_option("--maps-dir", maps_dir, "directory with the example map files");
  reproduce->add_option("--corrupt-golden", corrupt, "self-test: corrupt the golden value of one check");
  reproduce->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(file, constraints, bound, budget, json, certificate, fixed_point, params, expect);
    if (*verify) return cmd_verify(file, integrals, orbit, steps, params, json, seed);
    if (*resonance) return cmd_resonance(file, fixed_point, params, bound, json);
    if (*cyclo) {
      if (p <= 0 && cos_deg < 0) throw InvalidInput("cyclo needs --p or --cos-degree");
      return cmd_cyclo(p, cos_deg, json);
    }
    if (*reproduce) return cmd_reproduce(maps_dir, corrupt, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}
