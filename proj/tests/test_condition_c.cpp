#include <algorithm>
#include <random>

#include "doctest.h"
#include "unipv/condition_c.hpp"
#include "unipv/derivation.hpp"
#include "unipv/errors.hpp"

using namespace unipv;

namespace {

RatFunc P(std::string_view s) { return parse_expr(s, 6); }
const RatFunc Z{Variable::z()};

void check_witness(const std::vector<RatFunc>& f, const ConditionCReport& r) {
  REQUIRE(r.witness);
  const auto& c = r.witness->c;
  REQUIRE(c.size() == f.size());
  CHECK(std::any_of(c.begin(), c.end(), [](const RatFunc& x) { return !x.is_zero(); }));
  RatFunc combination;
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(c[i].is_parameter_only());
    combination += c[i] * f[i];
  }
  CHECK(Derivation().derive(r.witness->antiderivative) == combination);
}

// f built from known pieces: sum_p r_p/(z - p) + double poles + polynomial part.
struct Built {
  RatFunc f;
  std::vector<RatFunc> residues;
};

Built build(std::mt19937& rng, const std::vector<RatFunc>& poles) {
  std::uniform_int_distribution<int> small(-4, 4);
  Built b;
  for (const auto& p : poles) {
    const RatFunc r(small(rng));
    b.residues.push_back(r);
    b.f += r / (Z - p);
    b.f += RatFunc(small(rng)) / (Z - p).pow(2);
  }
  b.f += RatFunc(small(rng)) * Z + RatFunc(small(rng));
  return b;
}

}  // namespace

TEST_CASE("condition C examples") {
  SUBCASE("distinct symbolic poles") {
    auto r = check_condition_c({P("1/(z+a1)"), P("1/(z+a2)")});
    CHECK(r.holds);
    CHECK(r.rank == 2);
    REQUIRE(r.residues.rows() == 2);
    CHECK(r.residues == Matrix<RatFunc>::identity(2));
    CHECK(r.poles[0].location == P("-a1"));
    CHECK_FALSE(r.witness);
  }
  SUBCASE("duplicate entries") {
    std::vector<RatFunc> f{P("1/(z+1)"), P("1/(z+1)")};
    auto r = check_condition_c(f);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->c == std::vector<RatFunc>{RatFunc(1), RatFunc(-1)});
    CHECK(r.witness->antiderivative.is_zero());
    check_witness(f, r);
  }
  SUBCASE("pure double pole") {
    std::vector<RatFunc> f{P("1/(z+1)^2")};
    auto r = check_condition_c(f);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->c == std::vector<RatFunc>{RatFunc(1)});
    CHECK(r.witness->antiderivative == P("-1/(z+1)"));
  }
  SUBCASE("polynomial parts impose nothing") {
    std::vector<RatFunc> f{P("z^2+a1"), P("1/z")};
    auto r = check_condition_c(f);
    CHECK_FALSE(r.holds);
    CHECK(r.witness->c == std::vector<RatFunc>{RatFunc(1), RatFunc(0)});
    CHECK(r.witness->antiderivative == P("z^3/3+a1*z"));
  }
  SUBCASE("parameter-dependent kernel") {
    // Residue columns 1 and a2 at z = -a1 are dependent over Q(a).
    std::vector<RatFunc> f{P("1/(z+a1)"), P("a2/(z+a1) + 1/(z+a1)^3")};
    auto r = check_condition_c(f);
    CHECK_FALSE(r.holds);
    CHECK(r.witness->c == std::vector<RatFunc>{RatFunc(1), P("-1/a2")});
    check_witness(f, r);
  }
  SUBCASE("rational poles with non-monic factors") {
    std::vector<RatFunc> f{P("1/(2*z+1)"), P("3/(z^2-1)"), P("z/(z^2+z)")};
    auto r = check_condition_c(f);
    CHECK(r.poles.size() == 3);
    CHECK(r.rank == 3);
    CHECK(r.holds);
  }
}

TEST_CASE("condition C rejects unsupported denominators") {
  CHECK_THROWS_AS(check_condition_c({P("1/(z^2+1)")}), DomainError);
  CHECK_THROWS_AS(check_condition_c({P("1/(z^2-2)")}), DomainError);
  CHECK_THROWS_AS(check_condition_c({P("1/(z+a1*a2)")}), DomainError);
  CHECK_THROWS_AS(check_condition_c({P("1/(z+2*a1)")}), DomainError);
  CHECK_THROWS_AS(check_condition_c({RatFunc(Variable::x(1, 1))}), DomainError);
  CHECK_THROWS_AS(check_condition_c({}), DomainError);
  CHECK_THROWS_AS(integrate_residue_free(P("1/z")), DomainError);
  CHECK(integrate_residue_free(P("1/z^2")) == P("-1/z"));
}

TEST_CASE("1/(z+a_j) families with distinct poles hold for n <= 6") {
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<RatFunc> f;
    for (unsigned j = 1; j <= n; ++j) f.push_back(RatFunc(1) / (Z + RatFunc(static_cast<long>(j * j) - 3)));
    CHECK(check_condition_c(f).holds);
    std::vector<RatFunc> sym;
    for (unsigned j = 1; j <= n; ++j) sym.push_back(RatFunc(1) / (Z + RatFunc(Variable::param(j))));
    CHECK(check_condition_c(sym).holds);
  }
}

TEST_CASE("random families: residues, rank, witnesses, permutation invariance") {
  std::mt19937 rng(777);
  const std::vector<RatFunc> pool{P("0"), P("1"), P("-2"), P("1/2"), P("-a1"), P("-a3")};
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<unsigned> count(1, 4);
    const unsigned n = count(rng);
    std::vector<RatFunc> poles = pool;
    std::shuffle(poles.begin(), poles.end(), rng);
    poles.resize(count(rng));

    std::vector<RatFunc> f;
    std::vector<std::vector<RatFunc>> expected;
    for (unsigned i = 0; i < n; ++i) {
      Built b = build(rng, poles);
      f.push_back(b.f);
      expected.push_back(b.residues);
    }
    ConditionCReport r;
    try {
      r = check_condition_c(f);
    } catch (const DomainError&) {
      FAIL("supported family rejected");
    }
    // Residue oracle: entry at each constructed pole.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < poles.size(); ++k) {
        auto it = std::find_if(r.poles.begin(), r.poles.end(), [&](const Pole& p) { return p.location == poles[k]; });
        if (it == r.poles.end()) {
          CHECK(expected[i][k].is_zero());
          continue;
        }
        CHECK(r.residues(static_cast<std::size_t>(it - r.poles.begin()), i) == expected[i][k]);
      }
    CHECK(r.rank <= std::min<std::size_t>(n, poles.size()));
    if (n > poles.size()) CHECK_FALSE(r.holds);
    if (!r.holds) check_witness(f, r);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<RatFunc> g;
    for (auto i : perm) g.push_back(f[i]);
    auto rp = check_condition_c(g);
    CHECK(rp.holds == r.holds);
    CHECK(rp.rank == r.rank);
    if (!rp.holds) check_witness(g, rp);
  }
}

TEST_CASE("report text") {
  auto r = check_condition_c({P("1/(z+1)"), P("1/(z+1)")});
  const std::string s = to_text(r);
  CHECK(s.find("holds=false") != std::string::npos);
  CHECK(s.find("witness.c: 1 -1") != std::string::npos);
}
