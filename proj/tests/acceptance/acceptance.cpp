// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "resint/algebra.hpp"
#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"
#include "resint/fixed_points.hpp"
#include "resint/paper_suite.hpp"
#include "resint/real_algebraic.hpp"
#include "resint/report.hpp"

using namespace resint;

namespace {

RationalMap load(const std::string& name) {
  std::ifstream in(std::filesystem::path(RESINT_MAPS_DIR) / name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }
MultiPoly c(long n) { return MultiPoly(Rational(n)); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive();
}

const CertificateEntry* find_entry(const Certificate& cert, const std::string& name) {
  for (const auto& e : cert) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

// Collects failed sub-checks of one criterion.
struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// Durand-Kerner in double precision, independent of the library's root finder.
std::vector<std::complex<double>> dk_roots(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<std::complex<double>> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::pow(std::complex<double>(0.4, 0.9), k);
  for (int it = 0; it < 3000; ++it) {
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = 0, den = 1;
      for (int k = n; k >= 0; --k) num = num * z[i] + a[k] / a[n];
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      z[i] -= num / den;
    }
  }
  return z;
}

// Whether k is an integer combination of the independent rows of b (rational elimination).
bool in_span_integral(const IntMatrix& b, const std::vector<long>& k) {
  const std::size_t r = b.size(), n = k.size();
  if (r == 0) return std::all_of(k.begin(), k.end(), [](long x) { return x == 0; });
  // Solve c * B = k: columns of B^T augmented with k.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(r + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) m[j][i] = Rational(b[i][j]);
    m[j][r] = Rational(k[j]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < r && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (!m[i][r].is_zero()) return false;
  }
  for (std::size_t i = 0; i < row; ++i) {
    if (!(m[i][r] / m[i][pivots[i]]).is_integer()) return false;
  }
  return true;
}

bool power_product_is_one(const std::vector<Rational>& mu, const std::vector<long>& k) {
  Rational p(1);
  for (std::size_t i = 0; i < mu.size(); ++i) p *= pow(mu[i], k[i]);
  return p == Rational(1);
}

void for_each_in_box(std::size_t n, long r, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> k(n, -r);
  while (true) {
    fn(k);
    std::size_t i = 0;
    while (i < n && k[i] == r) k[i++] = -r;
    if (i == n) return;
    ++k[i];
  }
}

// ---- criteria -------------------------------------------------------------------

std::vector<std::string> criterion1() {
  Checker ok;
  const std::vector<std::pair<long, QPoly>> table{{5, QPoly{-1, 2, 4}},
                                                  {7, QPoly{-1, -4, 4, 8}},
                                                  {9, QPoly{1, -6, 0, 8}},
                                                  {14, QPoly{1, -4, -4, 8}},
                                                  {18, QPoly{-1, -6, 0, 8}}};
  for (const auto& [p, poly] : table) ok(min_poly_cos(p).poly == poly, "min_poly_cos(" + std::to_string(p) + ")");
  const std::vector<std::vector<long>> sets{{1, 2, 3, 4, 6}, {5, 8, 10, 12}, {7, 9, 14, 18}};
  for (long m = 1; m <= 3; ++m) {
    std::vector<long> got;
    for (long n : indices_with_cos_degree_at_most(m).indices) {
      if (cos_degree(n) == m) got.push_back(n);
    }
    ok(got == sets[m - 1], "index set for m = " + std::to_string(m));
  }
  return ok.failures;
}

std::vector<std::string> criterion2() {
  Checker ok;
  const MultiPoly x = var("x"), v = var("v");
  const MultiPoly quad = x * x - c(2) * x * v + c(1);
  for (long p = 3; p <= 50; ++p) {
    const MultiPoly r = resultant(cyclotomic_poly(p).to_multi("x"), quad, "x");
    const auto root = poly_sqrt(r);
    if (!root) {
      ok(false, "p = " + std::to_string(p) + " not a square");
      continue;
    }
    ok(root->degree("v") == totient(p) / 2, "p = " + std::to_string(p) + " root degree");
    ok((*root * *root - r).is_zero(), "p = " + std::to_string(p) + " square check");
  }
  return ok.failures;
}

std::vector<std::string> criterion3() {
  Checker ok;
  const auto v = planar_parametric(load("product_map.map"), {1, 1}, {parse_constraint("a > 9/8")});
  ok(v.kind == VerdictKind::CandidateParams, "verdict kind");
  ok(v.params == std::vector<Rational>{Rational(3, 2), Rational(2), Rational(9, 4), Rational(9, 2)}, "parameter set");
  return ok.failures;
}

std::vector<std::string> criterion4() {
  Checker ok;
  const auto f = load("cubic_point.map");
  const auto pts = real_fixed_points(f);
  if (pts.size() != 1) return {"expected one real fixed point"};
  const auto v = planar_pipeline(f, pts[0], {false, false, 6});
  const MultiPoly x = var("x"), y = var("y"), w = var("v");
  const MultiPoly px = x * x * x - c(5) * x * x + x - c(1), py = px.substitute("x", y);
  auto value = [&](const std::string& n) {
    const auto* e = find_entry(v.certificate, n);
    return e ? e->value : MultiPoly();
  };
  const MultiPoly t1 = value("T1"), t3 = value("T3");
  ok(t1 == -(y * y * py) || t1 == y * y * py, "T1 = -y^2 P(y) up to sign");
  ok(t3 == -((x * x + c(1)) * px) || t3 == (x * x + c(1)) * px, "T3 = -(x^2+1) P(x) up to sign");
  ok(proportional(value("U3"), c(5833) * pow(w, 3) + c(16607) * w * w + c(15650) * w + c(4874)), "cubic factor U3");
  const std::vector<MultiPoly> listed{w,
                                      w - c(1),
                                      w + c(1),
                                      c(2) * w + c(1),
                                      c(2) * w - c(1),
                                      c(2) * w * w - c(1),
                                      c(4) * w * w - c(3),
                                      c(4) * w * w + c(2) * w - c(1),
                                      c(4) * w * w - c(2) * w - c(1),
                                      c(8) * pow(w, 3) + c(4) * w * w - c(4) * w - c(1),
                                      c(8) * pow(w, 3) - c(6) * w + c(1),
                                      c(8) * pow(w, 3) - c(4) * w * w - c(4) * w + c(1),
                                      c(8) * pow(w, 3) - c(6) * w - c(1)};
  std::vector<MultiPoly> battery;
  for (const auto& e : v.certificate) {
    if (e.op == "min_poly_cos") battery.push_back(e.value);
  }
  ok(battery.size() == listed.size(), "battery has thirteen polynomials");
  for (const auto& l : listed) {
    ok(std::count_if(battery.begin(), battery.end(), [&](const MultiPoly& b) { return proportional(b, l); }) == 1,
       "battery contains " + l.str());
  }
  int nonzero = 0;
  for (const auto& e : v.certificate) {
    if (e.op == "resultant" && e.name.rfind("Res(U3,", 0) == 0) nonzero += !e.value.is_zero();
  }
  ok(nonzero == 13, "thirteen nonzero resultants");
  ok(v.kind == VerdictKind::Excluded, "verdict Excluded");
  return ok.failures;
}

std::vector<std::string> criterion5() {
  Checker ok;
  const auto todd = load("todd.map");
  const auto v = ndim_pipeline(todd);
  const auto* pe = find_entry(v.certificate, "P");
  if (!pe) return {"no eliminant"};
  const MultiPoly a = var("a");
  // mu is the eigenvalue variable of the certificate.
  std::string mu_name = "mu";
  for (const auto& n : pe->value.used_variables()) {
    if (n != "a") mu_name = n;
  }
  const MultiPoly mu = var(mu_name);
  const MultiPoly p4 = a * pow(mu, 4) - c(2) * (a - c(1)) * pow(mu, 3) + c(3) * (a - c(1)) * mu * mu -
                       c(2) * (a - c(1)) * mu + a;
  ok(proportional(pe->value, p4), "P4 up to scalar");
  // Normalize so that the mu^4 coefficient is a, then compare resultants exactly.
  const MultiPoly lead = pe->value.coefficient(mu_name, 4);
  const auto scale = try_divide(a, lead);
  if (!scale || !scale->is_constant()) return {"unexpected leading coefficient " + lead.str()};
  const MultiPoly p = pe->value * scale->constant_value();
  auto res = [&](long j) { return resultant(p, cyclotomic_poly(j).to_multi(mu_name), mu_name); };
  ok(res(3) == pow(c(4) * a - c(5), 2), "Res(P4, Phi_3) = (4a-5)^2");
  const MultiPoly r8 = res(8);
  ok(r8 == pow(a - c(1), 2), "Res(P4, Phi_8) = (a-1)^2 [computed " + r8.str() + "]");
  ok(res(10) == pow(a * a - a - c(1), 2), "Res(P4, Phi_10) = (a^2-a-1)^2");
  const std::set<Rational> raw(v.raw_candidates.begin(), v.raw_candidates.end());
  ok(raw == std::set<Rational>{Rational(-1), Rational(7, 9), Rational(5, 4), Rational(3), Rational(1)}, "candidate set");
  ok(v.params == std::vector<Rational>{Rational(-1), Rational(1)}, "survivors {-1, 1}");
  return ok.failures;
}

std::vector<std::string> criterion6() {
  Checker ok;
  auto holds = [](const RationalMap& f, const std::string& h) {
    return verify_first_integral(f, parse_expression(h, f.all_variables())).holds;
  };
  const auto rc = load("recurrence_c.map");
  ok(holds(rc, "x^2*y^2 - c*x*y"), "(y, -x + c/y) with x^2 y^2 - c x y");
  const auto f6 = load("power_f6.map");
  const std::string h1 = "x + 1/x + y + 1/y + x/y + y/x", h2 = "x*y + 1/(x*y) + x^2/y + y/x^2 + x/y^2 + y^2/x";
  ok(holds(f6, h1) && holds(f6, h2), "f6 with H1, H2");
  ok(functional_independence(f6.state_vars, {parse_expression(h1, f6.all_variables()),
                                             parse_expression(h2, f6.all_variables())})
             .verdict == Independence::Independent,
     "f6 independence");
  const auto todd = load("todd.map");
  const std::string t1 = "(x+1)*(y+1)*(z+1)*(a+x+y+z)/(x*y*z)", t2 = "(1+x+y)*(1+y+z)*(a+x+y+z+x*z)/(x*y*z)";
  ok(holds(todd, t1) && holds(todd, t2), "Todd with H1, H2");
  ok(functional_independence(todd.state_vars,
                             {parse_expression(t1, todd.all_variables()), parse_expression(t2, todd.all_variables())},
                             todd.params)
             .verdict == Independence::Independent,
     "Todd independence");
  ok(holds(load("four_dim.map"), "(x*y+a*y+b*x)*(z*t+a*t+b*z)*(a*x+a*z+b*t+b*y+c)/(x*y*z*t)"), "four-dimensional map");
  ok(!holds(load("doubling_swap.map"), "x"), "negative control");
  return ok.failures;
}

std::vector<std::string> criterion7() {
  Checker ok;
  // Independent enumeration: mu^2 - q mu - p with two integrals needs both
  // roots equal to +-1 (real case) or roots of unity with product 1.
  std::vector<std::pair<long, long>> oracle;
  for (long p = -10; p <= 10; ++p) {
    if (p == 0) continue;
    for (long q = -10; q <= 10; ++q) {
      const long disc = q * q + 4 * p;
      bool keep = false;
      if (disc < 0) {
        keep = p == -1 && std::abs(q) <= 1;
      } else {
        keep = (p == -1 && std::abs(q) == 2) || (p == 1 && q == 0);
      }
      if (keep) oracle.emplace_back(p, q);
    }
  }
  auto got = power_map_sweep(10);
  std::sort(got.begin(), got.end());
  ok(got == oracle, "sweep reproduces the oracle list");
  const std::vector<std::pair<long, long>> six{{-1, -2}, {-1, 2}, {1, 0}, {-1, -1}, {-1, 0}, {-1, 1}};
  std::vector<std::pair<long, long>> sorted_six = six;
  std::sort(sorted_six.begin(), sorted_six.end());
  ok(got == sorted_six, "exactly f1..f6");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(1, 50), den(1, 9);
  const std::vector<std::pair<const char*, unsigned>> periodic{
      {"power_f3.map", 2}, {"power_f4.map", 3}, {"power_f5.map", 4}, {"power_f6.map", 6}};
  for (const auto& [name, period] : periodic) {
    const auto f = load(name);
    for (int i = 0; i < 10; ++i) {
      const std::vector<Rational> x{Rational(Integer(num(rng)), Integer(den(rng))),
                                    Rational(Integer(num(rng)), Integer(den(rng)))};
      ok(iterate(f, x, period).back() == x, std::string(name) + " period");
    }
  }
  return ok.failures;
}

std::vector<std::string> criterion8() {
  Checker ok;
  std::mt19937_64 rng(8);
  const long primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> e(-3, 3), len(1, 3), sign(0, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> mu;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Rational m(1);
      for (long p : primes) m *= pow(Rational(p), e(rng));
      if (sign(rng)) m = -m;
      mu.push_back(m);
    }
    const auto lat = rank_rational_eigs(mu);
    for (const auto& row : lat.basis) {
      std::vector<long> k;
      for (const auto& x : row) k.push_back(x.get_si());
      ok(power_product_is_one(mu, k), "basis vector is a relation");
    }
    bool agree = true;
    for_each_in_box(mu.size(), 6, [&](const std::vector<long>& k) {
      if (power_product_is_one(mu, k) != in_span_integral(lat.basis, k)) agree = false;
    });
    if (!agree) {
      std::string s;
      for (const auto& m : mu) s += m.str() + " ";
      ok(false, "lattice and brute force disagree for " + s);
    }
  }
  const auto diag = load("diag235.map");
  ok(theorem1_bound(diag, AlgebraicPoint::rational(diag.state_vars, {0, 0, 0})).bound == 0, "diag(2,3,5) bound 0");
  return ok.failures;
}

std::vector<std::string> criterion9() {
  Checker ok;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> deg(1, 5), coef(-9, 9);
  auto random_poly = [&] {
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) cs.emplace_back(coef(rng));
    if (cs.back().is_zero()) cs.back() = Rational(1);
    return QPoly(cs);
  };
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const QPoly p = random_poly(), q = random_poly();
    const Rational exact = resultant(p.to_multi("x"), q.to_multi("x"), "x").constant_value();
    std::vector<double> pa, qa;
    for (const auto& x : p.coefficients()) pa.push_back(x.to_double());
    for (const auto& x : q.coefficients()) qa.push_back(x.to_double());
    const auto rp = dk_roots(pa), rq = dk_roots(qa);
    std::complex<double> prod = std::pow(pa.back(), q.degree()) * std::pow(qa.back(), p.degree());
    for (const auto& r : rp) {
      for (const auto& s : rq) prod *= r - s;
    }
    const double e = exact.to_double();
    if (std::abs(prod.real() - e) > 1e-6 * std::max(1.0, std::abs(e)) || std::abs(prod.imag()) > 1e-6 * std::max(1.0, std::abs(e))) {
      ++bad;
    }
  }
  ok(bad == 0, std::to_string(bad) + " resultants disagree with the root product");
  for (long n = 1; n <= 100; ++n) {
    QPoly prod = QPoly::constant(Rational(1));
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    }
    ok(prod == QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1)), "prod Phi_d = x^n - 1 for n = " + std::to_string(n));
  }
  const auto roots = sturm_isolate(QPoly{-1, 1, -5, 1});
  ok(roots.size() == 1, "one real root of x^3 - 5x^2 + x - 1");
  if (roots.size() == 1) {
    const Rational width(Integer(1), Integer("100000000000000000000"));
    const auto r = roots[0].refined(width);
    ok(r.interval().width() < width, "refinement below 1e-20");
    ok(r.interval().lo.to_double() < 4.8360 && r.interval().hi.to_double() > 4.8359, "root near 4.836");
  }
  return ok.failures;
}

std::vector<std::string> criterion10() {
  Checker ok;
  const auto first = reproduce_paper(RESINT_MAPS_DIR);
  const auto second = reproduce_paper(RESINT_MAPS_DIR);
  ok(first.pass, "first reproduce-paper run");
  ok(second.pass, "second reproduce-paper run");
  ok(first.checks.size() >= 12, "at least twelve golden checks");
  ok(canonical_dump(first.report) == canonical_dump(second.report), "byte-identical reports");
  // Every Excluded verdict replays from its serialized certificate.
  std::vector<std::pair<RationalMap, ObstructionVerdict>> excluded;
  const auto cubic = load("cubic_point.map");
  excluded.emplace_back(cubic, planar_pipeline(cubic, real_fixed_points(cubic).at(0)));
  const auto diag = load("diag235.map");
  excluded.emplace_back(diag, ndim_pipeline(diag));
  const auto g = load("product_map.map").specialize({{"a", Rational(7, 4)}});
  excluded.emplace_back(g, planar_pipeline(g, AlgebraicPoint::rational(g.state_vars, {1, 1})));
  const auto ex = load("product_map.map");
  excluded.emplace_back(ex, planar_parametric(ex, {1, 1}, {parse_constraint("a > 5"), parse_constraint("a < 6")}));
  for (const auto& [f, v] : excluded) {
    ok(v.kind == VerdictKind::Excluded, "verdict is Excluded");
    const Certificate back = certificate_from_json(Json::parse(to_json(v.certificate).dump()));
    ok(!replay(f, back).has_value(), "certificate replays");
    bool same = back.size() == v.certificate.size();
    for (std::size_t i = 0; same && i < back.size(); ++i) same = (back[i].value - v.certificate[i].value).is_zero();
    ok(same, "replayed polynomials are identical");
  }
  return ok.failures;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<std::vector<std::string>()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cosine minimal polynomials and index sets", 1, criterion1},
      {2, "Res(Phi_p, x^2 - 2xv + 1) is a square, 3 <= p <= 50", 30, criterion2},
      {3, "parametric planar family under a > 9/8", 5, criterion3},
      {4, "cubic fixed point certificate", 60, criterion4},
      {5, "third-order family: eliminant, resultants, candidates", 30, criterion5},
      {6, "first-integral verification suite", 10, criterion6},
      {7, "power-map classification and periodicity", 5, criterion7},
      {8, "resonance lattice against brute force", 30, criterion8},
      {9, "foundation properties", 30, criterion9},
      {10, "determinism and replay", 300, criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    try {
      failures = cr.run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_seconds) {
      failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (failures.empty() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs << " s)";
    for (const auto& f : failures) line << "\n    - " << f;
    std::cout << line.str() << std::endl;
    failed += !failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
