#include "resint/paper_suite.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <regex>
#include <sstream>

#include "resint/algebra.hpp"
#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"
#include "resint/fixed_points.hpp"

namespace resint {

namespace {

struct Spec {
  std::string id;
  std::string description;
  std::string expected;
  std::function<std::string()> run;
  bool polynomial = false;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

std::string join(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (long x : v) s.push_back(std::to_string(x));
  return join(s);
}

std::string join(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return join(s);
}

std::vector<std::string> identifiers(const std::string& text) {
  static const std::regex word("[A-Za-z_][A-Za-z0-9_]*");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), word); it != std::sregex_iterator(); ++it) {
    if (std::find(out.begin(), out.end(), it->str()) == out.end()) out.push_back(it->str());
  }
  return out;
}

// Goldens written as polynomials are compared as polynomials, not as strings.
bool same(const std::string& expected, const std::string& actual) {
  if (expected == actual) return true;
  try {
    const auto names = identifiers(expected + " " + actual);
    return parse_expression(expected, names) == parse_expression(actual, names);
  } catch (const Error&) {
    return false;
  }
}

std::string prim(const MultiPoly& p) { return p.is_zero() ? "0" : p.primitive().str(); }

// Certificate entry by name, as a primitive polynomial string.
std::string entry(const ObstructionVerdict& v, const std::string& name) {
  for (const auto& e : v.certificate) {
    if (e.name == name) return prim(e.value);
  }
  return "<missing " + name + ">";
}

class Corpus {
 public:
  explicit Corpus(std::string dir) : dir_(std::move(dir)) {}
  RationalMap load(const std::string& name) const {
    std::ifstream in(std::filesystem::path(dir_) / name);
    if (!in) throw InvalidInput("cannot open map file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_map(ss.str());
  }

 private:
  std::string dir_;
};

std::vector<Spec> specs(const Corpus& maps) {
  // Each pipeline runs once and serves several checks.
  auto cubic_cache = std::make_shared<std::optional<ObstructionVerdict>>();
  auto todd_cache = std::make_shared<std::optional<ObstructionVerdict>>();
  const auto cubic = [&maps, cubic_cache]() -> const ObstructionVerdict& {
    if (!*cubic_cache) {
      const auto f = maps.load("cubic_point.map");
      *cubic_cache = planar_pipeline(f, real_fixed_points(f).at(0), {false, false, 6});
    }
    return **cubic_cache;
  };
  const auto todd = [&maps, todd_cache]() -> const ObstructionVerdict& {
    if (!*todd_cache) *todd_cache = ndim_pipeline(maps.load("todd.map"));
    return **todd_cache;
  };
  const auto cos_set = [](long m) {
    std::vector<long> out;
    for (long n : indices_with_cos_degree_at_most(m).indices) {
      if (cos_degree(n) == m) out.push_back(n);
    }
    return join(out);
  };
  const auto verify = [&maps](const std::string& map, const std::vector<std::string>& integrals) {
    const auto f = maps.load(map);
    std::vector<std::string> out;
    for (const auto& h : integrals) {
      out.push_back(verify_first_integral(f, parse_expression(h, f.all_variables())).holds ? "true" : "false");
    }
    return join(out);
  };
  const std::string f6h1 = "x + 1/x + y + 1/y + x/y + y/x";
  const std::string f6h2 = "x*y + 1/(x*y) + x^2/y + y/x^2 + x/y^2 + y^2/x";
  const std::string th1 = "(x+1)*(y+1)*(z+1)*(a+x+y+z)/(x*y*z)";
  const std::string th2 = "(1+x+y)*(1+y+z)*(a+x+y+z+x*z)/(x*y*z)";

  return {
      {"cos-index-m1", "indices p with cos(2 pi/p) rational", "1, 2, 3, 4, 6", [=] { return cos_set(1); }},
      {"cos-index-m2", "indices p with cos(2 pi/p) quadratic", "5, 8, 10, 12", [=] { return cos_set(2); }},
      {"cos-index-m3", "indices p with cos(2 pi/p) cubic", "7, 9, 14, 18", [=] { return cos_set(3); }},
      {"cos-minpoly", "minimal polynomials of cos(2 pi/p), p = 5, 7, 9, 14, 18",
       "4*v^2 + 2*v - 1; 8*v^3 + 4*v^2 - 4*v - 1; 8*v^3 - 6*v + 1; 8*v^3 - 4*v^2 - 4*v + 1; 8*v^3 - 6*v - 1",
       [] {
         std::string s;
         for (long p : {5, 7, 9, 14, 18}) s += (s.empty() ? "" : "; ") + prim(min_poly_cos(p).poly.to_multi("v"));
         return s;
       }},
      {"cos-resultant-squares", "Res_x(Phi_p, x^2 - 2xv + 1) is a square of degree phi(p)/2, 3 <= p <= 50",
       "48 squares",
       [] {
         const MultiPoly x = MultiPoly::variable("x"), v = MultiPoly::variable("v");
         const MultiPoly quad = x * x - Rational(2) * x * v + MultiPoly(1);
         int ok = 0;
         for (long p = 3; p <= 50; ++p) {
           const auto root = poly_sqrt(resultant(cyclotomic_poly(p).to_multi("x"), quad, "x"));
           if (root && root->degree("v") == totient(p) / 2) ++ok;
         }
         return std::to_string(ok) + " squares";
       }},
      {"ex1-params", "(xy, (a+(2-a)x)y/(1+xy)) at (1,1), a > 9/8: candidate parameters", "3/2, 2, 9/4, 9/2",
       [&maps] {
         return join(planar_parametric(maps.load("product_map.map"), {1, 1}, {parse_constraint("a > 9/8")}).params);
       }},
      {"conc-T1", "cubic example: Res_x(S1, S2), primitive", "y^5 - 5*y^4 + y^3 - y^2",
       [=] { return entry(cubic(), "T1"); }, true},
      {"conc-T3", "cubic example: Res_y(S1, S2), primitive", "x^5 - 5*x^4 + 2*x^3 - 6*x^2 + x - 1",
       [=] { return entry(cubic(), "T3"); }, true},
      {"conc-U3", "cubic example: factor of U through v-hat", "5833*v^3 + 16607*v^2 + 15650*v + 4874",
       [=] { return entry(cubic(), "U3"); }, true},
      {"conc-battery", "cubic example: battery size, vanishing resultants and verdict", "13; none; Excluded",
       [=] {
         const auto& v = cubic();
         return std::to_string(v.searched_indices.size()) + "; " + (v.indices.empty() ? "none" : join(v.indices)) +
                "; " + to_string(v.kind);
       }},
      {"todd-P4", "Todd family: reduced eliminant",
       "a*mu^4 - 2*a*mu^3 + 3*a*mu^2 - 2*a*mu + a + 2*mu^3 - 3*mu^2 + 2*mu", [=] { return entry(todd(), "P"); }, true},
      {"todd-res-phi3", "Todd family: Res(P4, Phi_3)", "16*a^2 - 40*a + 25", [=] { return entry(todd(), "Res(P,Phi_3)"); }, true},
      {"todd-res-phi8", "Todd family: Res(P4, Phi_8)", "a^4 - 4*a^3 + 6*a^2 - 4*a + 1",
       [=] { return entry(todd(), "Res(P,Phi_8)"); }, true},
      {"todd-res-phi10", "Todd family: Res(P4, Phi_10)", "a^4 - 2*a^3 - a^2 + 2*a + 1",
       [=] { return entry(todd(), "Res(P,Phi_10)"); }, true},
      {"todd-candidates", "Todd family: candidates, then survivors", "-1, 7/9, 1, 5/4, 3; -1, 1",
       [=] {
         const auto& v = todd();
         return join(v.raw_candidates) + "; " + join(v.params);
       }},
      {"verify-recurrence", "x^2 y^2 - c x y for (y, -x + c/y)", "true",
       [=] { return verify("recurrence_c.map", {"x^2*y^2 - c*x*y"}); }},
      {"verify-f6", "H1, H2 for f6 and their independence", "true, true, independent",
       [=, &maps] {
         const auto f = maps.load("power_f6.map");
         const auto ind = functional_independence(
             f.state_vars, {parse_expression(f6h1, f.all_variables()), parse_expression(f6h2, f.all_variables())});
         return verify("power_f6.map", {f6h1, f6h2}) + ", " + to_string(ind.verdict);
       }},
      {"verify-todd", "H1, H2 for the Todd family (symbolic a) and their independence", "true, true, independent",
       [=, &maps] {
         const auto f = maps.load("todd.map");
         const auto ind = functional_independence(
             f.state_vars, {parse_expression(th1, f.all_variables()), parse_expression(th2, f.all_variables())},
             f.params);
         return verify("todd.map", {th1, th2}) + ", " + to_string(ind.verdict);
       }},
      {"verify-four-dim", "integral of the four-dimensional map (symbolic a, b, c)", "true",
       [=] { return verify("four_dim.map", {"(x*y+a*y+b*x)*(z*t+a*t+b*z)*(a*x+a*z+b*t+b*y+c)/(x*y*z*t)"}); }},
      {"verify-negative", "x for (y, 2x) is not an integral", "false", [=] { return verify("doubling_swap.map", {"x"}); }},
      {"power-sweep", "(p, q) with |p|, |q| <= 10 passing the two-integral test", "(-1,-2) (-1,-1) (-1,0) (-1,1) (-1,2) (1,0)",
       [] {
         auto s = power_map_sweep(10);
         std::sort(s.begin(), s.end());
         std::string out;
         for (const auto& [p, q] : s) out += (out.empty() ? "" : " ") + ("(" + std::to_string(p) + "," + std::to_string(q) + ")");
         return out;
       }},
      {"periods", "f3, f4, f5, f6 return to the start after 2, 3, 4, 6 steps", "2, 3, 4, 6",
       [&maps] {
         std::vector<long> out;
         for (const char* name : {"power_f3.map", "power_f4.map", "power_f5.map", "power_f6.map"}) {
           const auto f = maps.load(name);
           const std::vector<Rational> x{Rational(2, 7), Rational(5, 3)};
           auto orbit = iterate(f, x, 12);
           for (std::size_t k = 1; k < orbit.size(); ++k) {
             if (orbit[k] == x) {
               out.push_back(static_cast<long>(k));
               break;
             }
           }
         }
         return join(out);
       }},
      {"prime-eigenvalues", "diag(2, 3, 5): resonance bound at the origin", "0",
       [&maps] {
         const auto f = maps.load("diag235.map");
         return std::to_string(theorem1_bound(f, AlgebraicPoint::rational(f.state_vars, {0, 0, 0})).bound);
       }},
  };
}

}  // namespace

std::vector<std::string> golden_check_ids() {
  std::vector<std::string> ids;
  for (const auto& s : specs(Corpus("."))) ids.push_back(s.id);
  return ids;
}

SuiteResult reproduce_paper(const std::string& maps_dir, const std::optional<std::string>& corrupt) {
  SuiteResult out;
  const Corpus maps(maps_dir);
  const auto all = specs(maps);
  if (corrupt && std::none_of(all.begin(), all.end(), [&](const Spec& s) { return s.id == *corrupt; })) {
    throw InvalidInput("no golden check named " + *corrupt);
  }
  out.report = report_header("reproduce-paper");
  Json checks = Json::array();
  out.pass = true;
  for (const auto& s : all) {
    GoldenCheck c{s.id, s.description, s.expected, "", false};
    if (corrupt && *corrupt == s.id) c.expected = "corrupted golden value";
    try {
      c.actual = s.run();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.pass = s.polynomial ? same(c.expected, c.actual) : c.actual == c.expected;
    out.pass = out.pass && c.pass;
    checks.push_back({{"id", c.id}, {"description", c.description}, {"expected", c.expected}, {"actual", c.actual},
                      {"pass", c.pass}});
    out.checks.push_back(std::move(c));
  }
  out.report["checks"] = checks;
  out.report["pass"] = out.pass;
  return out;
}

}  // namespace resint
