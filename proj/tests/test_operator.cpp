#include <random>

#include "doctest.h"
#include "random_poly.hpp"
#include "unipv/errors.hpp"
#include "unipv/operator.hpp"

using namespace unipv;

namespace {

RatFunc P(std::string_view s) { return parse_expr(s, 4); }
RatFunc X(unsigned i, unsigned j) { return RatFunc(Variable::x(i, j)); }

}  // namespace

TEST_CASE("bareiss determinant against cofactor expansion") {
  // 3x3 polynomial matrix, expanded by hand along the first row.
  const MPoly z{Variable::z()};
  const MPoly a{Variable::param(1)};
  Matrix<MPoly> m(3, 3);
  m(0, 0) = z;      m(0, 1) = a;      m(0, 2) = MPoly(1);
  m(1, 0) = MPoly(2); m(1, 1) = z * z;  m(1, 2) = a + 1;
  m(2, 0) = a * z;  m(2, 1) = MPoly(0); m(2, 2) = z - a;
  const MPoly expected = z * (z * z * (z - a) - (a + 1) * 0) - a * (MPoly(2) * (z - a) - (a + 1) * a * z) +
                         MPoly(1) * (MPoly(2) * 0 - z * z * a * z);
  CHECK(bareiss_determinant(m) == expected);

  Matrix<MPoly> zero_pivot(2, 2);
  zero_pivot(0, 1) = z;
  zero_pivot(1, 0) = a;
  CHECK(bareiss_determinant(zero_pivot) == -(z * a));
}

TEST_CASE("wronskian examples") {
  const PVExtension ext = build_standard_extension(2);
  const Derivation& d = ext.derivation();
  CHECK(wronskian({RatFunc(1)}, d).is_one());
  CHECK(wronskian({RatFunc(1), X(1, 1)}, d) == ext.f()[0]);
  const RatFunc u = P("x[2,1]/(z+a2)");
  CHECK(wronskian({u, u}, d).is_zero());
  CHECK_THROWS_AS(wronskian({}, d), DomainError);
}

TEST_CASE("wronskian is alternating and vanishes on dependent families") {
  const PVExtension ext = build_standard_extension(2);
  const Derivation& d = ext.derivation();
  const RatFunc y1 = X(1, 1);
  const RatFunc y2 = P("x[2,1]+z");
  const RatFunc y3 = P("x[1,2]^2");
  const RatFunc w = wronskian({y1, y2, y3}, d);
  CHECK(!w.is_zero());
  CHECK(wronskian({y2, y1, y3}, d) == -w);
  CHECK(wronskian({y1, y3, y2}, d) == -w);
  CHECK(wronskian({y1, y2, P("2*x[1,1]-3*a1*(x[2,1]+z)")}, d).is_zero());
}

TEST_CASE("pv_operator n = 1") {
  const DiffOperator op = pv_operator(build_standard_extension(1));
  CHECK(op.order() == 2);
  CHECK(op.coeff(1) == P("1/(z+a1)"));
  CHECK(op.coeff(0).is_zero());
  // Hand cofactor oracle: L = Y'' - (f1'/f1) Y'.
  const RatFunc f1 = P("1/(z+a1)");
  const RatFunc df1 = P("-1/(z+a1)^2");
  CHECK(op.coeff(1) == -(df1 / f1));
}

TEST_CASE("pv_operator n = 2 golden") {
  const PVExtension ext = build_standard_extension(2);
  const DiffOperator op = pv_operator(ext);
  REQUIRE(op.order() == 3);
  CHECK(op.coeff(2) == P("(3*z+a1+2*a2)/((z+a1)*(z+a2))"));
  CHECK(op.coeff(1) == P("1/((z+a1)*(z+a2))"));
  CHECK(op.coeff(0).is_zero());
  CHECK(coeffs_in_base_field(op));
  CHECK(op.text() == "d^3/dz^3+((3*z+a1+2*a2)/(z^2+z*a1+z*a2+a1*a2))*d^2/dz^2+(1/(z^2+z*a1+z*a2+a1*a2))*d/dz");

  const Derivation& d = ext.derivation();
  CHECK(apply_operator(op, RatFunc(1), d).is_zero());
  CHECK(apply_operator(op, X(2, 1), d).is_zero());
  // Direct evaluation: L(z) = a_1.
  CHECK(apply_operator(op, P("z"), d) == op.coeff(1));
}

TEST_CASE("pv_operator n = 3 golden") {
  const DiffOperator op = pv_operator(build_standard_extension(3));
  const std::string den = "((z+a1)*(z+a2)*(z+a3))";
  CHECK(op.coeff(3) == P("(6*z^2+(3*a1+4*a2+5*a3)*z+2*a3*a1+a2*a1+3*a3*a2)/" + den));
  CHECK(op.coeff(2) == P("(7*z+a1+2*a2+4*a3)/" + den));
  CHECK(op.coeff(1) == P("1/" + den));
  CHECK(op.coeff(0).is_zero());
}

TEST_CASE("annihilation, membership and linearity for n = 1..4") {
  std::mt19937 rng(5);
  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const PVExtension ext = build_standard_extension(n);
    const Derivation& d = ext.derivation();
    const DiffOperator op = pv_operator(ext);
    CHECK(op.order() == n + 1);
    CHECK(coeffs_in_base_field(op));
    for (const auto& y : ext.solution_basis()) CHECK(apply_operator(op, y, d).is_zero());
    CHECK(!apply_operator(op, P("z"), d).is_zero());

    if (n <= 2) {
      const std::vector<Variable> vars{Variable::z(), Variable::x(1, 1), Variable::x(n, 1)};
      for (int k = 0; k < 5; ++k) {
        const RatFunc u = unipv::testing::random_ratfunc(rng, vars, 2, 2);
        const RatFunc v = unipv::testing::random_ratfunc(rng, vars, 2, 2);
        const RatFunc c = P("3/(a1+2)");
        CHECK(apply_operator(op, c * u + v, d) == c * apply_operator(op, u, d) + apply_operator(op, v, d));
      }
    }
  }
}

TEST_CASE("cofactor coefficients reproduce the defining determinant") {
  std::mt19937 rng(77);
  const PVExtension ext = build_standard_extension(2);
  const Derivation& d = ext.derivation();
  const auto basis = ext.solution_basis();
  const DiffOperator op = pv_operator(ext);
  const RatFunc w = wronskian(basis, d);
  const std::vector<Variable> vars{Variable::z(), Variable::param(2), Variable::x(1, 2), Variable::x(2, 1)};
  for (int k = 0; k < 10; ++k) {
    const RatFunc y = unipv::testing::random_ratfunc(rng, vars, 1, 3);
    std::vector<RatFunc> family{y};
    family.insert(family.end(), basis.begin(), basis.end());
    // w(Y, basis) = (-1)^k w(basis) L(Y) with k = n + 1 = 3.
    CHECK(wronskian(family, d) == -(w * apply_operator(op, y, d)));
  }
}

TEST_CASE("coeffs_in_base_field negative control and errors") {
  DiffOperator op({RatFunc(), X(1, 1)});
  CHECK_FALSE(coeffs_in_base_field(op));
  const PVExtension ext = build_standard_extension(1);
  CHECK_THROWS_AS(operator_from_basis({X(1, 1), P("2*x[1,1]")}, ext.derivation()), DomainError);
  CHECK_THROWS_AS(DiffOperator(std::vector<RatFunc>{}), DomainError);
}

TEST_CASE("operator latex") {
  const DiffOperator op = pv_operator(build_standard_extension(1));
  CHECK(op.latex() == "\\frac{d^{2}}{dz^{2}} + \\frac{1}{z + \\alpha_{1}} \\frac{d}{dz}");
}
