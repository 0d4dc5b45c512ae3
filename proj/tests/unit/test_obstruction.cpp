#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "resint/algebra.hpp"
#include "resint/cyclotomic.hpp"
#include "resint/errors.hpp"
#include "resint/fixed_points.hpp"
#include "resint/obstruction.hpp"

using namespace resint;
using testing::q;
using testing::var;

namespace {

RationalMap load(const std::string& name) { return testing::load_map(name); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive();
}

const CertificateEntry* find_entry(const Certificate& c, const std::string& name) {
  for (const auto& e : c) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool has_note(const ObstructionVerdict& v, const std::string& needle) {
  return std::any_of(v.notes.begin(), v.notes.end(),
                     [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

std::vector<Rational> rs(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("cubic fixed point is excluded") {
  const auto f = load("cubic_point.map");
  const auto pts = real_fixed_points(f);
  REQUIRE(pts.size() == 1);
  const auto v = planar_pipeline(f, pts[0]);
  const auto x = var("x"), y = var("y"), w = var("v");
  const MultiPoly px = x * x * x - q(5) * x * x + x - q(1), py = px.substitute("x", y);

  CHECK(v.kind == VerdictKind::Excluded);
  CHECK(v.indices.empty());
  REQUIRE(find_entry(v.certificate, "T1"));
  CHECK(proportional(find_entry(v.certificate, "T1")->value, y * y * py));
  CHECK(proportional(find_entry(v.certificate, "T3")->value, (x * x + q(1)) * px));
  CHECK(proportional(find_entry(v.certificate, "V1")->value, py));
  CHECK(proportional(find_entry(v.certificate, "V3")->value, px));
  const auto* u3 = find_entry(v.certificate, "U3");
  REQUIRE(u3);
  const MultiPoly expected = q(5833) * w * w * w + q(16607) * w * w + q(15650) * w + q(4874);
  CHECK(proportional(u3->value, expected));

  // The thirteen polynomials with a root cos(2 pi n / p) of degree at most 3.
  std::vector<MultiPoly> battery;
  for (long p : v.searched_indices) battery.push_back(min_poly_cos(p).poly.to_multi("v"));
  const std::vector<MultiPoly> listed{
      w,
      w - q(1),
      w + q(1),
      q(2) * w + q(1),
      q(2) * w - q(1),
      q(2) * w * w - q(1),
      q(4) * w * w - q(3),
      q(4) * w * w + q(2) * w - q(1),
      q(4) * w * w - q(2) * w - q(1),
      q(8) * pow(w, 3) + q(4) * w * w - q(4) * w - q(1),
      q(8) * pow(w, 3) - q(6) * w + q(1),
      q(8) * pow(w, 3) - q(4) * w * w - q(4) * w + q(1),
      q(8) * pow(w, 3) - q(6) * w - q(1)};
  CHECK(battery.size() == 13);
  for (const auto& l : listed) {
    INFO(l.str());
    CHECK(std::any_of(battery.begin(), battery.end(), [&](const MultiPoly& b) { return proportional(b, l); }));
  }

  // Independent double-precision oracle: v-hat = T^2/(2D) - 1 is a root of U3.
  const double s = pts[0].coordinate(0).to_double();
  const double a11 = 1 - s, a12 = 2 * s - s;
  const double den = s * s - 3 * s + 1, num = s * s + s * s + 1;
  const double a21 = ((2 * s + s) * den - num * 2 * s) / (den * den);
  const double a22 = (s * den + 3 * num) / (den * den);
  const double t = a11 + a22, d = a11 * a22 - a12 * a21;
  const double vh = t * t / (2 * d) - 1;
  CHECK(std::abs(5833 * vh * vh * vh + 16607 * vh * vh + 15650 * vh + 4874) < 1e-6 * 5833);
  CHECK(t * t - 4 * d < 0);

  CHECK_FALSE(replay(f, v.certificate).has_value());
  auto broken = v.certificate;
  for (auto& e : broken) {
    if (e.name == "U3") e.value = e.value + MultiPoly(1);
  }
  CHECK(replay(f, broken) == std::optional<std::string>("U3"));
  CHECK(has_note(v, "full elimination U vanishes identically"));
}

TEST_CASE("elimination order does not change the verdict") {
  const auto f = load("cubic_point.map");
  const auto pt = real_fixed_points(f).at(0);
  PlanarOptions swapped;
  swapped.swap_elimination_order = true;
  swapped.full_route = false;
  const auto a = planar_pipeline(f, pt, {false, false, 6});
  const auto b = planar_pipeline(f, pt, swapped);
  CHECK(a.kind == b.kind);
  CHECK(a.indices == b.indices);
  CHECK(proportional(find_entry(a.certificate, "Uref")->value, find_entry(b.certificate, "Uref")->value));
  CHECK_FALSE(replay(f, b.certificate).has_value());
}

TEST_CASE("rational fixed points: pipeline against the fast path") {
  const auto m = load("product_map.map");
  for (const Rational a : {Rational(7, 4), Rational(3, 2), Rational(9, 4), Rational(9, 2), Rational(5, 3)}) {
    INFO(a.str());
    const auto g = m.specialize({{"a", a}});
    const auto v = planar_pipeline(g, AlgebraicPoint::rational(g.state_vars, {1, 1}));
    const auto fast = fast_path_rational_fp(Rational(3, 2), a / Rational(2));
    CHECK(v.kind == fast.kind);
    CHECK(v.indices == fast.indices);
    CHECK(has_note(v, "fast path agrees"));
    CHECK_FALSE(replay(g, v.certificate).has_value());
  }
  const auto g = m.specialize({{"a", Rational(7, 4)}});
  CHECK(planar_pipeline(g, AlgebraicPoint::rational(g.state_vars, {1, 1})).kind == VerdictKind::Excluded);
}

TEST_CASE("rational fast path") {
  CHECK(fast_path_rational_fp(0, 2).indices == std::vector<long>{2});
  CHECK(fast_path_rational_fp(2, 4).indices == std::vector<long>{3});
  CHECK(fast_path_rational_fp(Rational(3, 2), Rational(3, 4)).indices == std::vector<long>{6});
  CHECK(fast_path_rational_fp(1, 2).kind == VerdictKind::Excluded);
  CHECK_THROWS_AS(fast_path_rational_fp(3, 1), HypothesisFailure);
  CHECK_THROWS_AS(fast_path_rational_fp(3, 2), HypothesisFailure);
  CHECK_THROWS_AS(fast_path_rational_fp(0, 1), HypothesisFailure);
  // Property: every admissible T^2/D is 2 + 2 cos(2 pi / p).
  for (long p : {1, 2, 3, 4, 6}) {
    const double r = 2 + 2 * std::cos(2 * M_PI / p);
    const Rational rr(static_cast<long>(std::lround(r)));
    CHECK(std::abs(r - rr.to_double()) < 1e-12);
    const Rational d(3);
    if (rr == Rational(4)) continue;  // D would need T^2 = 4D, excluded by the hypothesis
    Rational t;
    if (!exact_sqrt(rr * d, t)) continue;
    CHECK(fast_path_rational_fp(t, d).indices == std::vector<long>{p});
  }
}

TEST_CASE("quadratic surds and the quadratic fast path") {
  const QuadSurd r2{0, 1, 2};
  CHECK(r2.sign() == 1);
  CHECK(QuadSurd{1, -1, 2}.sign() == -1);
  CHECK(QuadSurd{2, -1, 3}.sign() == 1);
  CHECK(QuadSurd{3, 0, 4} == QuadSurd{1, 1, 4});
  CHECK(QuadSurd{0, 2, 2} == QuadSurd{0, 1, 8});

  // T = 1, D = 1 - sqrt(2)/2 gives T^2/D = 2 + sqrt(2), p = 8.
  const auto v = fast_path_quadratic_fp({1, 0, 2}, {1, Rational(-1, 2), 2});
  CHECK(v.kind == VerdictKind::CandidateIndices);
  CHECK(v.indices == std::vector<long>{8});
  // T^2/D = (3 - sqrt 5)/2 with T = 1.
  CHECK(fast_path_quadratic_fp({1, 0, 5}, {Rational(3, 2), Rational(1, 2), 5}).indices == std::vector<long>{5});
  CHECK(fast_path_quadratic_fp({1, 0, 2}, {1, Rational(1, 4), 2}).kind == VerdictKind::Excluded);
  CHECK(fast_path_quadratic_fp({1, 0, 2}, {Rational(1, 3), 0, 2}).indices == std::vector<long>{6});
  CHECK_THROWS_AS(fast_path_quadratic_fp({3, 0, 2}, {1, 0, 2}), HypothesisFailure);
  // Property: the admissible values are exactly 2 + 2 cos(2 pi n / p) of degree <= 2.
  for (long p : {5, 8, 10, 12}) {
    for (long n = 1; n < p; ++n) {
      if (std::gcd(n, p) != 1) continue;
      const double target = 2 + 2 * std::cos(2 * M_PI * n / p);
      // T = 1, D = 1 / target; pick the surd for 1/target among the conjugates.
      bool matched = false;
      for (const auto& [s, half] : std::vector<std::pair<long, Rational>>{{5, Rational(1, 2)}, {2, 1}, {3, 1}}) {
        for (const Rational a : {Rational(3, 2), Rational(5, 2), Rational(2)}) {
          for (int sg : {1, -1}) {
            const double val = a.to_double() + half.to_double() * sg * std::sqrt(static_cast<double>(s));
            if (std::abs(val - target) > 1e-12) continue;
            const QuadSurd inv_num{a, -half * Rational(sg), s};
            const Rational nrm = a * a - half * half * Rational(s);
            const QuadSurd d{inv_num.a / nrm, inv_num.b / nrm, s};
            const auto out = fast_path_quadratic_fp({1, 0, s}, d);
            CHECK(out.indices == std::vector<long>{p});
            matched = true;
          }
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("quadratic field elements as surds") {
  const QPoly m{-2, 0, 1};
  const auto roots = sturm_isolate(m);
  REQUIRE(roots.size() == 2);
  const NumberField neg(m, roots[0]), posf(m, roots[1]);
  CHECK(to_quad_surd(posf, QPoly{0, 1}) == QuadSurd{0, 1, 2});
  CHECK(to_quad_surd(neg, QPoly{0, 1}) == QuadSurd{0, -1, 2});
  CHECK(to_quad_surd(posf, QPoly{3, 2}) == QuadSurd{3, 2, 2});
  const QPoly m2{1, -3, 1};  // t^2 - 3t + 1, roots (3 +- sqrt 5)/2
  const auto r2 = sturm_isolate(m2);
  CHECK(to_quad_surd(NumberField(m2, r2[1]), QPoly{0, 1}) == QuadSurd{Rational(3, 2), Rational(1, 2), 5});
  CHECK(to_quad_surd(NumberField(m2, r2[0]), QPoly{0, 1}) == QuadSurd{Rational(3, 2), Rational(-1, 2), 5});
}

TEST_CASE("two integrals for power maps") {
  CHECK(two_integral_classification(-2, 1).possible);
  CHECK(two_integral_classification(2, 1).possible);
  CHECK(two_integral_classification(0, -1).possible);
  CHECK(two_integral_classification(1, 1).possible);
  CHECK(two_integral_classification(0, 1).possible);
  CHECK_FALSE(two_integral_classification(0, 2).possible);
  CHECK_FALSE(two_integral_classification(-3, 1).possible);
  CHECK_FALSE(two_integral_classification(1, -2).possible);
  const std::vector<std::pair<long, long>> expected{{-1, -2}, {-1, -1}, {-1, 0}, {-1, 1}, {-1, 2}, {1, 0}};
  for (long bound : {2, 5, 9}) {
    auto got = power_map_sweep(bound);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  // The six survivors are periodic maps or have Jacobian with eigenvalue 1 only.
  for (const auto& [p, qq] : expected) {
    const Rational b(-qq), c(-p);
    const Rational disc = b * b - Rational(4) * c;
    CHECK((disc < Rational(0) ? c == Rational(1) : true));
  }
}

TEST_CASE("hypothesis failures are inconclusive") {
  const auto rot = parse_map("vars x, y;\nf = (y, -x)\n");
  const auto v = planar_pipeline(rot, AlgebraicPoint::rational(rot.state_vars, {0, 0}));
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.reason.find("modulus 1") != std::string::npos);
  const auto dbl = load("doubling_swap.map");
  const auto w = planar_pipeline(dbl, AlgebraicPoint::rational(dbl.state_vars, {0, 0}));
  CHECK(w.kind == VerdictKind::Inconclusive);
  CHECK(w.reason.find("conjugate pair") != std::string::npos);
  CHECK_THROWS_AS(planar_pipeline(load("product_map.map"), AlgebraicPoint::rational({"x", "y"}, {1, 1})),
                  InvalidInput);
}

TEST_CASE("parametric planar family") {
  const auto m = load("product_map.map");
  const auto v = planar_parametric(m, {1, 1}, {parse_constraint("a > 9/8")});
  CHECK(v.kind == VerdictKind::CandidateParams);
  CHECK(v.params == rs({Rational(3, 2), Rational(2), Rational(9, 4), Rational(9, 2)}));
  REQUIRE(v.flagged.size() == 1);
  CHECK(v.flagged[0].first == Rational(2));
  CHECK_FALSE(replay(m, v.certificate).has_value());
  // Oracle: T = 3/2 and D = a/2, so T^2/D = 9/(2a) must be 0, 1, 2, 3 or 4.
  std::vector<Rational> oracle;
  for (long r = 1; r <= 4; ++r) {
    const Rational a = Rational(9) / Rational(2 * r);
    if (a > Rational(9, 8)) oracle.push_back(a);
  }
  oracle.push_back(2);
  std::sort(oracle.begin(), oracle.end());
  CHECK(v.params == oracle);

  // Constraint violating the hypothesis region.
  const auto bad = planar_parametric(m, {1, 1}, {parse_constraint("a > 0")});
  CHECK(bad.kind == VerdictKind::Inconclusive);
  CHECK(bad.reason.find("hypothesis") != std::string::npos);
  CHECK_THROWS_AS(planar_parametric(m, {2, 3}, {}), InvalidInput);
  const auto narrow = planar_parametric(m, {1, 1}, {parse_constraint("a > 5"), parse_constraint("a < 6")});
  CHECK(narrow.kind == VerdictKind::Excluded);
}

TEST_CASE("constraints") {
  const auto c = parse_constraint("a >= -3/2");
  CHECK(c.param == "a");
  CHECK(c.op == ParamConstraint::Op::Ge);
  CHECK(c.value == Rational(-3, 2));
  CHECK(c.admits(Rational(-3, 2)));
  CHECK_FALSE(c.admits(-2));
  CHECK(parse_constraint("b != 0").admits(1));
  CHECK_FALSE(parse_constraint("b != 0").admits(0));
  CHECK(parse_constraint("b=2").admits(2));
  CHECK_THROWS_AS(parse_constraint("a >> 2"), InvalidInput);
  CHECK_THROWS_AS(parse_constraint("2 < a"), InvalidInput);
  CHECK_THROWS_AS(parse_constraint("a > 1/0"), InvalidInput);
}

TEST_CASE("third-order recurrence family") {
  const auto todd = load("todd.map");
  const auto el = ndim_eliminate(todd);
  REQUIRE_FALSE(el.failure.has_value());
  const auto mu = var(el.mu), a = var("a");
  const MultiPoly p4 = a * pow(mu, 4) - q(2) * (a - q(1)) * pow(mu, 3) + q(3) * (a - q(1)) * mu * mu -
                       q(2) * (a - q(1)) * mu + a;
  CHECK(proportional(el.eliminant, p4));
  CHECK(el.split_cyclotomic == std::vector<long>{2, 2});
  CHECK(proportional(el.content, a));

  const auto v = ndim_pipeline(todd);
  CHECK(v.kind == VerdictKind::CandidateParams);
  CHECK(v.raw_candidates == rs({Rational(-1), Rational(7, 9), Rational(1), Rational(5, 4), Rational(3)}));
  CHECK(v.params == rs({Rational(-1), Rational(1)}));
  CHECK(v.searched_indices == std::vector<long>{1, 2, 3, 4, 5, 6, 8, 10, 12});
  CHECK_FALSE(replay(todd, v.certificate).has_value());
  // a = 0 removes the whole eliminant and is flagged, not decided.
  CHECK(std::any_of(v.flagged.begin(), v.flagged.end(), [](const auto& fl) { return fl.first == Rational(0); }));

  const auto* r3 = find_entry(v.certificate, "Res(P,Phi_3)");
  REQUIRE(r3);
  CHECK(proportional(r3->value, pow(q(4) * a - q(5), 2)));
  const auto* r10 = find_entry(v.certificate, "Res(P,Phi_10)");
  REQUIRE(r10);
  CHECK(proportional(r10->value, pow(a * a - a - q(1), 2)));
  const auto* r8 = find_entry(v.certificate, "Res(P,Phi_8)");
  REQUIRE(r8);
  CHECK(proportional(r8->value, pow(a - q(1), 4)));

  // Discarded values keep a non-cyclotomic factor.
  CHECK(proportional(p4.evaluate("a", Rational(5, 4)), (mu * mu + mu + q(1)) * (q(5) * mu * mu - q(7) * mu + q(5))));
  CHECK(proportional(p4.evaluate("a", 3), (mu * mu + q(1)) * (q(3) * mu * mu - q(4) * mu + q(3))));
  CHECK(proportional(p4.evaluate("a", Rational(7, 9)), (mu + q(1)) * (q(7) * pow(mu, 3) - q(3) * mu * mu - q(3) * mu + q(7))));
  CHECK(proportional(p4.evaluate("a", -1), pow(mu - q(1), 4)));
  CHECK(proportional(p4.evaluate("a", 1), pow(mu, 4) + q(1)));

  const auto restricted = ndim_pipeline(todd, {{parse_constraint("a > 0")}, true});
  CHECK(restricted.params == rs({Rational(1)}));
}

TEST_CASE("n-dimensional degenerate and excluded cases") {
  const auto diag = ndim_pipeline(load("diag235.map"));
  CHECK(diag.kind == VerdictKind::Excluded);
  CHECK_FALSE(replay(load("diag235.map"), diag.certificate).has_value());
  const auto id = ndim_pipeline(load("identity.map"));
  CHECK(id.kind == VerdictKind::Inconclusive);
  CHECK(id.reason.find("continuum") != std::string::npos);
  const auto sw = ndim_pipeline(load("swap.map"));
  CHECK(sw.kind == VerdictKind::Inconclusive);
  const auto many = ndim_pipeline(load("four_dim.map"));
  CHECK(many.kind == VerdictKind::Inconclusive);
  // (y, x^2 y^3) at the fixed points: the eigenvalues 3/2 +- sqrt(17)/2 are not roots of unity.
  const auto pw = ndim_pipeline(parse_map("vars x, y;\nf = (2*y, x + 1)\n"));
  CHECK(pw.kind == VerdictKind::Excluded);
  const auto per = ndim_pipeline(load("power_f5.map"));
  CHECK(per.kind == VerdictKind::CandidateIndices);
}

TEST_CASE("replay detects tampering") {
  const auto todd = load("todd.map");
  const auto v = ndim_pipeline(todd);
  REQUIRE(v.certificate.size() > 5);
  for (std::size_t i = 0; i < v.certificate.size(); i += 3) {
    auto broken = v.certificate;
    broken[i].value = broken[i].value * Rational(2) + MultiPoly(1);
    const auto r = replay(todd, broken);
    REQUIRE(r.has_value());
    CHECK(*r == broken[i].name);
  }
  auto unknown = v.certificate;
  unknown[0].op = "nonsense";
  CHECK_THROWS_AS(replay(todd, unknown), InvalidInput);
}
