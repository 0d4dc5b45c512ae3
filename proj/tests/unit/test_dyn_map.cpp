#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "resint/algebra.hpp"
#include "resint/errors.hpp"
#include "resint/fixed_points.hpp"
#include "resint/rational_map.hpp"

using namespace resint;
using testing::q;
using testing::var;

namespace {

using testing::slurp;
RationalMap load(const std::string& name) { return testing::load_map(name); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive();
}

}  // namespace

TEST_CASE("parsing") {
  const auto ex1 = parse_map("vars x,y; params b,c; f = (y, -b*x + c/y)");
  CHECK(ex1.state_vars == std::vector<std::string>{"x", "y"});
  CHECK(ex1.params == std::vector<std::string>{"b", "c"});
  const auto x = var("x"), y = var("y"), b = var("b"), c = var("c");
  CHECK(ex1.components[1] == RationalFunction(c - b * x * y, y));

  const auto todd = parse_map("vars x,y,z; params a; f = (y, z, (a+y+z)/x)");
  CHECK(todd.components[2].den() == x);

  const auto id = parse_map("vars x; f = (x)");
  CHECK(id == identity_map({"x"}));

  // Comments, whitespace, rational literals, negative exponents.
  const auto m = parse_map("# header\nvars  x ,y ;\n  f = ( 3/2 * x^2 ,\n y^(-2) - 1/2 )\n# trailer\n");
  CHECK(m.components[0] == RationalFunction(Rational(3, 2) * x * x));
  CHECK(m.components[1] == RationalFunction(q(2) - y * y, q(2) * y * y));
}

TEST_CASE("parse errors") {
  try {
    parse_map("vars x;\nf = (x + w)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_map("vars x, y; f = (x/(y - y), y)"), ParseError);
  CHECK_THROWS_AS(parse_map("vars x; f = (x +)"), ParseError);
  CHECK_THROWS_AS(parse_map("vars x, y; f = (x)"), ParseError);
  CHECK_THROWS_AS(parse_map("vars x, x; f = (x, x)"), ParseError);
  CHECK_THROWS_AS(parse_map("vars x; f = (x) extra"), ParseError);
  CHECK_THROWS_AS(parse_map("vars x; f = (x $ 1)"), ParseError);
}

TEST_CASE("render round trip over the corpus") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RESINT_MAPS_DIR)) {
    if (entry.path().extension() != ".map") continue;
    const auto m = parse_map(slurp(entry.path()));
    CHECK(parse_map(m.render()) == m);
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("jacobian and characteristic data") {
  // (y, x^2 y^3) at (1,1): [[0,1],[2,3]], char poly mu^2 - 3mu - 2.
  const auto m = parse_map("vars x,y; f = (y, x^2*y^3)");
  const auto cp = char_poly(m);
  const auto mu = var(cp.eigen_var);
  const MultiPoly at = cp.numerator.evaluate("x", Rational(1)).evaluate("y", Rational(1));
  CHECK(proportional(at, mu * mu - q(3) * mu - q(2)));
  const auto j = jacobian(m);
  CHECK(j[1][0].evaluate({{"x", 1}, {"y", 1}}) == Rational(2));

  const auto neg = parse_map("vars x,y; f = (y, y^2/x)");
  const auto cpn = char_poly(neg);
  const MultiPoly atn = cpn.numerator.evaluate("x", Rational(1)).evaluate("y", Rational(1));
  CHECK(proportional(atn, mu * mu - q(2) * mu + q(1)));

  const auto id2 = identity_map({"x", "y"});
  CHECK(proportional(char_poly(id2).numerator, (mu - q(1)) * (mu - q(1))));

  // Todd-type map at (x,x,x) with a = x^2 - 2x.
  const auto todd = load("todd.map");
  const auto ct = char_poly(todd);
  const auto x = var("x");
  MultiPoly r = ct.numerator.substitute("y", x).substitute("z", x).substitute("a", x * x - q(2) * x);
  CHECK(proportional(r, x * (mu + q(1)) * (x * mu * mu - (x + q(1)) * mu + x)));

  // Planar trace and determinant.
  const auto conc = load("cubic_point.map");
  const auto cc = char_poly(conc);
  REQUIRE(cc.trace.has_value());
  const MultiPoly expected = mu * mu * cc.det->den() * cc.trace->den() -
                             mu * cc.trace->num() * cc.det->den() + cc.det->num() * cc.trace->den();
  CHECK(proportional(RationalFunction(expected, cc.trace->den() * cc.det->den()).num(), cc.numerator));
}

TEST_CASE("fixed-point systems") {
  const auto x = var("x"), y = var("y"), b = var("b"), c = var("c");
  const auto ex1 = fixed_point_system(load("recurrence_bc.map"));
  CHECK(ex1.equations[0] == y - x);
  CHECK(ex1.equations[1] == c - b * x * y - y * y);
  // On the diagonal the second equation reads c - (b+1) z^2.
  CHECK(ex1.equations[1].substitute("y", x) == c - (b + q(1)) * x * x);

  const auto conc = fixed_point_system(load("cubic_point.map"));
  CHECK(conc.equations[0] == y * (y - x));
  CHECK(conc.equations[1] == -x * x * y + x * x + x * y + q(3) * y * y - y + q(1));

  const auto id = fixed_point_system(identity_map({"x", "y"}));
  CHECK(id.equations[0].is_zero());
  CHECK(id.equations[1].is_zero());
}

TEST_CASE("planar elimination") {
  const auto x = var("x"), y = var("y");
  const auto conc = eliminate_fixed_points(fixed_point_system(load("cubic_point.map")));
  const MultiPoly px = x * x * x - q(5) * x * x + x - q(1), py = px.substitute("x", y);
  CHECK(proportional(conc.eliminant_last, y * y * py));
  CHECK(proportional(conc.eliminant_first, (x * x + q(1)) * px));
  REQUIRE(conc.real_fixed_points.size() == 1);
  const auto& s = conc.real_fixed_points[0];
  CHECK(std::abs(s.coordinate(0).to_double() - 4.8360) < 1e-3);
  CHECK(same_value(s.coordinate(0), s.coordinate(1)));

  // Power map with p = 2, q = 1 has fixed points (0,0), (1,1), (-1,-1); (0,0) is admissible here.
  const auto pw = eliminate_fixed_points(fixed_point_system(parse_map("vars x,y; f = (y, x^2*y)")));
  std::vector<std::vector<Rational>> pts;
  for (const auto& p : pw.real_fixed_points) pts.push_back(*p.rational_coords());
  CHECK(pts == std::vector<std::vector<Rational>>{{-1, -1}, {0, 0}, {1, 1}});

  // Poles are filtered: (y, x^2/y) has no admissible fixed point at y = 0.
  const auto pole = eliminate_fixed_points(fixed_point_system(parse_map("vars x,y; f = (y, x^2/y)")));
  for (const auto& p : pole.real_fixed_points) CHECK((*p.rational_coords())[1] != Rational(0));

  const auto swap = eliminate_fixed_points(fixed_point_system(load("swap.map")));
  CHECK(swap.degenerate);
  CHECK_FALSE(swap.diagnostic.empty());
}

TEST_CASE("fixed points are fixed") {
  const auto conc = load("cubic_point.map");
  for (const auto& p : real_fixed_points(conc)) {
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(p.field.sign(p.value(conc.components[i]) - p.coords[i]) == 0);
    }
  }
  const auto prod = load("product_map.map");
  const auto rat = parameter_free_rational_fixed_points(prod);
  CHECK(std::find(rat.begin(), rat.end(), std::vector<Rational>{1, 1}) != rat.end());
  for (const auto& p : rat) {
    const auto img = evaluate(prod, p, {{"a", Rational(7, 3)}});
    CHECK(img == p);
  }
  const auto todd = load("todd.map");
  for (const auto& p : real_fixed_points(todd.specialize({{"a", 3}}))) {
    CHECK(evaluate(todd, *p.rational_coords(), {{"a", 3}}) == *p.rational_coords());
  }
  CHECK(real_fixed_points(todd.specialize({{"a", 3}})).size() == 2);  // x = 3 and x = -1
}

TEST_CASE("composition, evaluation and periodicity") {
  const auto f3 = load("power_f3.map"), f4 = load("power_f4.map"), f5 = load("power_f5.map"),
             f6 = load("power_f6.map");
  CHECK(iterate_map(f3, 2) == identity_map({"x", "y"}));
  CHECK(iterate_map(f4, 3) == identity_map({"x", "y"}));
  CHECK(iterate_map(f5, 4) == identity_map({"x", "y"}));
  CHECK(iterate_map(f6, 6) == identity_map({"x", "y"}));
  CHECK_FALSE(iterate_map(f6, 3) == identity_map({"x", "y"}));

  const auto lin = parse_map("vars x,y; f = (y, x*y)");
  CHECK(evaluate(lin, {2, 3}) == std::vector<Rational>{3, 6});
  CHECK_THROWS_AS(evaluate(f5, {0, 1}), PoleError);
  const auto orbit = iterate(f5, {2, 3}, 4);
  CHECK(orbit.back() == orbit.front());
  CHECK_THROWS_AS(evaluate(load("recurrence_bc.map"), {1, 1}), InvalidInput);
}
