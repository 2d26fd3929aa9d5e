#include <random>

#include "doctest.h"
#include "random_poly.hpp"
#include "unipv/errors.hpp"
#include "unipv/ratfunc.hpp"

using namespace unipv;
using unipv::testing::random_nonzero_poly;
using unipv::testing::random_poly;
using unipv::testing::random_ratfunc;

namespace {

const MPoly z{Variable::z()};
const MPoly a1{Variable::param(1)};
const MPoly a2{Variable::param(2)};
const MPoly a3{Variable::param(3)};

RatFunc P(std::string_view s) { return parse_expr(s, 4); }

}  // namespace

TEST_CASE("monomial order is degree-lexicographic with z most significant") {
  Monomial zz(Variable::z(), 2);
  Monomial za(Variable::z());
  za = za * Monomial(Variable::param(1));
  Monomial aa(Variable::param(1), 2);
  Monomial x(Variable::x(1, 1), 3);
  CHECK(x > zz);
  CHECK(zz > za);
  CHECK(za > aa);
  CHECK(Monomial(Variable::z()) > Monomial(Variable::param(1)));
  CHECK(Monomial(Variable::param(9)) > Monomial(Variable::x(1, 1)));
  CHECK(Monomial(Variable::x(1, 2)) > Monomial(Variable::x(2, 1)));
}

TEST_CASE("parse_expr examples") {
  RatFunc r = P("1/(z+a1)");
  CHECK(r.num() == MPoly(1));
  CHECK(r.den() == z + a1);

  r = P("(z^2-1)/(z-1)");
  CHECK(r.num() == z + 1);
  CHECK(r.den() == MPoly(1));

  r = P("3/6 * z");
  CHECK(r.num() == z.scaled(Scalar(1, 2)));
  CHECK(r.den().is_one());

  CHECK(P("-z^2") == RatFunc(-(z * z)));
  CHECK(P("2*x[1,1] - x[2,1]/a3") == RatFunc(MPoly(Variable::x(1, 1)).scaled(2)) - RatFunc(Variable::x(2, 1)) / RatFunc(a3));
  CHECK(P("  ( z ) ^ 0 ") == RatFunc(1));
}

TEST_CASE("parse_expr errors") {
  CHECK_THROWS_AS(P("z+"), ParseError);
  CHECK_THROWS_AS(P("z)"), ParseError);
  CHECK_THROWS_AS(P("1/(z-z)"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("a5"), ParseError);
  CHECK_THROWS_AS(P("a0"), ParseError);
  CHECK_THROWS_AS(P("x[4,2]"), ParseError);
  CHECK_THROWS_AS(P("y"), ParseError);
  try {
    P("z + * 3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  try {
    parse_expr("a1+a3", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("field operations") {
  // Hand cross-multiplication: 1/u + 1/v = (u+v)/(uv).
  const MPoly u = z + a1;
  const MPoly v = z + a2;
  RatFunc sum = RatFunc(1) / RatFunc(u) + RatFunc(1) / RatFunc(v);
  CHECK(sum.num() == z.scaled(2) + a1 + a2);
  CHECK(sum.den() == u * v);
  CHECK(sum == P("(2*z+a1+a2)/((z+a1)*(z+a2))"));

  std::mt19937 rng(7);
  const std::vector<Variable> vars{Variable::z(), Variable::param(1), Variable::x(1, 1)};
  for (int k = 0; k < 30; ++k) {
    RatFunc a = random_ratfunc(rng, vars, 3, 4);
    if (a.is_zero()) continue;
    CHECK((a * (RatFunc(1) / a)).is_one());
  }
  CHECK(RatFunc(u).pow(0).is_one());
  CHECK(RatFunc(u).pow(-2) == RatFunc(MPoly(1), u * u));
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(z, MPoly()), DivisionByZero);
  CHECK_THROWS_AS(RatFunc().pow(-1), DivisionByZero);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(z * z - 1, z - 1) == z - 1);
  CHECK(poly_gcd(z + a1, MPoly(1)) == MPoly(1));
  CHECK(poly_gcd(MPoly(), (z + a1).scaled(3)) == z + a1);
  CHECK(poly_gcd(MPoly(), MPoly()).is_zero());

  const MPoly u = z + a1;
  const MPoly v = z + a2;
  const MPoly g = poly_gcd(u * u * v, u * v * v);
  CHECK(g == u * v);
  // Trial-division oracle: g divides both, and the cofactors share neither factor.
  const MPoly ca = (u * u * v).divide_exact(g);
  const MPoly cb = (u * v * v).divide_exact(g);
  CHECK(!(ca.try_divide(u) && cb.try_divide(u)));
  CHECK(!(ca.try_divide(v) && cb.try_divide(v)));
}

TEST_CASE("poly_gcd on random multiples") {
  std::mt19937 rng(2024);
  const std::vector<Variable> vars{Variable::z(), Variable::param(1), Variable::param(2)};
  for (int k = 0; k < 200; ++k) {
    MPoly p = random_nonzero_poly(rng, vars, 4, 5);
    MPoly q = random_nonzero_poly(rng, vars, 4, 5);
    MPoly g = random_nonzero_poly(rng, vars, 2, 3);
    MPoly h = poly_gcd(p * g, q * g);
    CAPTURE(p.text());
    CAPTURE(q.text());
    CAPTURE(g.text());
    REQUIRE(h.try_divide(g.monic()).has_value());
    CHECK((p * g).try_divide(h).has_value());
    CHECK((q * g).try_divide(h).has_value());
    CHECK(h.leading_coeff() == 1);

    RatFunc r(p, q);
    CHECK(p * r.den() == q * r.num());
    CHECK(r.den().leading_coeff() == 1);
    CHECK(poly_gcd(r.num(), r.den()).is_one());
  }
}

TEST_CASE("ring laws and canonical form") {
  std::mt19937 rng(99);
  const std::vector<Variable> vars{Variable::z(), Variable::param(1), Variable::x(1, 1)};
  for (int k = 0; k < 60; ++k) {
    RatFunc a = random_ratfunc(rng, vars, 2, 3);
    RatFunc b = random_ratfunc(rng, vars, 2, 3);
    RatFunc c = random_ratfunc(rng, vars, 2, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc());
    CHECK(RatFunc(a.num(), a.den()) == a);
    // Canonical text re-parses to the identical value.
    CHECK(parse_expr(a.text(), 1) == a);
  }
}

TEST_CASE("canonical text and latex") {
  CHECK(RatFunc().text() == "0");
  CHECK(P("3/6").text() == "1/2");
  CHECK(P("-z^2+1").text() == "-z^2+1");
  CHECK(P("1/(z+a1)").text() == "1/(z+a1)");
  CHECK(P("x[1,2]*a2/z").text() == "a2*x[1,2]/z");
  CHECK(P("-3/2*z/(2*a1)").text() == "-3/4*z/a1");
  CHECK(P("(3*z+a1+2*a2)/((z+a1)*(z+a2))").text() == "(3*z+a1+2*a2)/(z^2+z*a1+z*a2+a1*a2)");
  CHECK(P("1/(z+a1)").latex() == "\\frac{1}{z + \\alpha_{1}}");
  CHECK(P("-1/2*x[2,1]").latex() == "-\\frac{1}{2} x_{2,1}");
}
