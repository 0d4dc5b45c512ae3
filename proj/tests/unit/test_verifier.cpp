#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "resint/errors.hpp"
#include "resint/verifier.hpp"

using namespace resint;

namespace {

RationalMap load(const std::string& name) { return testing::load_map(name); }

RationalFunction expr(const RationalMap& f, const std::string& text) {
  return parse_expression(text, f.all_variables());
}

const char* kF6H1 = "x + 1/x + y + 1/y + x/y + y/x";
const char* kF6H2 = "x*y + 1/(x*y) + x^2/y + y/x^2 + x/y^2 + y^2/x";
const char* kToddH1 = "(x+1)*(y+1)*(z+1)*(a+x+y+z)/(x*y*z)";
const char* kToddH2 = "(1+x+y)*(1+y+z)*(a+x+y+z+x*z)/(x*y*z)";
const char* kFourH = "(x*y+a*y+b*x)*(z*t+a*t+b*z)*(a*x+a*z+b*t+b*y+c)/(x*y*z*t)";

std::vector<Rational> random_start(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(1, 40), den(1, 7);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rational(Integer(num(rng)), Integer(den(rng))));
  return out;
}

}  // namespace

TEST_CASE("first integrals from the examples") {
  const auto rc = load("recurrence_c.map");
  CHECK(verify_first_integral(rc, expr(rc, "x^2*y^2 - c*x*y")).holds);

  const auto f6 = load("power_f6.map");
  CHECK(verify_first_integral(f6, expr(f6, kF6H1)).holds);
  CHECK(verify_first_integral(f6, expr(f6, kF6H2)).holds);

  const auto todd = load("todd.map");
  CHECK(verify_first_integral(todd, expr(todd, kToddH1)).holds);
  CHECK(verify_first_integral(todd, expr(todd, kToddH2)).holds);

  const auto four = load("four_dim.map");
  CHECK(verify_first_integral(four, expr(four, kFourH)).holds);

  // With b != 1 the same function is not an integral.
  const auto bc = load("recurrence_bc.map");
  const auto bad = verify_first_integral(bc, expr(bc, "x^2*y^2 - c*x*y"));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("negative control") {
  const auto f = load("doubling_swap.map");
  const auto r = verify_first_integral(f, expr(f, "x"));
  CHECK_FALSE(r.holds);
  CHECK(r.residual == MultiPoly::variable("y") - MultiPoly::variable("x"));
  CHECK_THROWS_AS(verify_first_integral(f, parse_expression("w", {"w"})), InvalidInput);
  const auto o = orbit_invariance_numeric(f, expr(f, "x"), {1, 1}, 20);
  CHECK(o.max_deviation > 100);
}

TEST_CASE("affine images of an integral are integrals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  const auto f6 = load("power_f6.map");
  const auto f = load("doubling_swap.map");
  const auto h = expr(f6, kF6H1), x = expr(f, "x");
  for (int i = 0; i < 20; ++i) {
    Rational a(d(rng));
    if (a.is_zero()) a = 1;
    const Rational b(d(rng));
    CHECK(verify_first_integral(f6, RationalFunction(a) * h + RationalFunction(b)).holds);
    CHECK_FALSE(verify_first_integral(f, RationalFunction(a) * x + RationalFunction(b)).holds);
  }
}

TEST_CASE("functional independence") {
  const auto f6 = load("power_f6.map");
  const auto h1 = expr(f6, kF6H1), h2 = expr(f6, kF6H2);
  const auto two = functional_independence(f6.state_vars, {h1, h2});
  CHECK(two.verdict == Independence::Independent);
  CHECK_FALSE(two.witness.empty());
  const auto sq = functional_independence(f6.state_vars, {h1, h1 * h1});
  CHECK(sq.verdict == Independence::Dependent);
  CHECK(sq.method == "symbolic minors");

  const auto todd = load("todd.map");
  const auto t = functional_independence(todd.state_vars, {expr(todd, kToddH1), expr(todd, kToddH2)}, todd.params);
  CHECK(t.verdict == Independence::Independent);

  // A single candidate is independent iff it is nonconstant.
  CHECK(functional_independence(f6.state_vars, {h1}).verdict == Independence::Independent);
  CHECK(functional_independence(f6.state_vars, {RationalFunction(5)}).verdict == Independence::Dependent);
  CHECK(functional_independence({"x"}, {expr(f6, "x"), expr(f6, "x^2")}).verdict == Independence::Dependent);

  // Determinism in the seed.
  const auto again = functional_independence(f6.state_vars, {h1, h2});
  CHECK(again.witness == two.witness);
}

TEST_CASE("orbit invariance") {
  const auto f6 = load("power_f6.map");
  const auto h1 = expr(f6, kF6H1);
  const auto num = orbit_invariance_numeric(f6, h1, {2, 3}, 100);
  CHECK(num.steps_done == 100);
  CHECK(num.max_deviation < 1e-9);
  const auto ex = orbit_invariance_exact(f6, h1, {2, 3}, 100);
  REQUIRE(ex.exact_max_deviation);
  CHECK(ex.exact_max_deviation->is_zero());

  const auto todd = load("todd.map");
  const auto t = orbit_invariance_exact(todd, expr(todd, kToddH1), {1, 2, 3}, 50, {{"a", 1}});
  CHECK(t.steps_done == 50);
  CHECK(t.exact_max_deviation->is_zero());

  // Pole reporting: f5 sends (0, 1) to (1, 1/0).
  const auto f5 = load("power_f5.map");
  const auto p = orbit_invariance_exact(f5, expr(f5, "x + y"), {0, 1}, 5);
  REQUIRE(p.pole_step);
  CHECK(*p.pole_step == 1);
  CHECK_THROWS_AS(orbit_invariance_exact(todd, expr(todd, kToddH1), {1, 2, 3}, 5), InvalidInput);
}

TEST_CASE("verified integrals are constant on random orbits") {
  std::mt19937_64 rng(11);
  struct Pair {
    const char* map;
    const char* integral;
    std::map<std::string, Rational> params;
  };
  const std::vector<Pair> pairs{{"power_f6.map", kF6H1, {}},
                                {"power_f6.map", kF6H2, {}},
                                {"recurrence_c.map", "x^2*y^2 - c*x*y", {{"c", Rational(3, 2)}}},
                                {"todd.map", kToddH1, {{"a", Rational(2)}}},
                                {"todd.map", kToddH2, {{"a", Rational(-1, 3)}}},
                                {"four_dim.map", kFourH, {{"a", 1}, {"b", 2}, {"c", 3}}}};
  for (const auto& pr : pairs) {
    const auto f = load(pr.map);
    const auto r = expr(f, pr.integral);
    REQUIRE(verify_first_integral(f, r).holds);
    for (int i = 0; i < 10; ++i) {
      const auto o = orbit_invariance_exact(f, r, random_start(rng, f.dimension()), 8, pr.params);
      INFO(pr.map << " " << pr.integral);
      if (o.pole_step && *o.pole_step == 0) continue;
      CHECK(o.exact_max_deviation->is_zero());
    }
  }
}

TEST_CASE("globally periodic maps") {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<const char*, unsigned>> maps{
      {"power_f3.map", 2}, {"power_f4.map", 3}, {"power_f5.map", 4}, {"power_f6.map", 6}};
  for (const auto& [name, period] : maps) {
    const auto f = load(name);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_start(rng, 2);
      const auto orbit = iterate(f, x, period);
      CHECK(orbit.back() == x);
      if (period > 2) CHECK_FALSE(iterate(f, x, 1).back() == x);
    }
  }
}
