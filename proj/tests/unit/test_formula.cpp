#include <doctest.h>

#include "oracles.hpp"
#include "robp/formula.hpp"

using namespace robp;

namespace {

RocFormula formula(unsigned n, std::vector<IndexSet> dnf, std::vector<IndexSet> cnf, const char *c) {
  return RocFormula{n, std::move(dnf), std::move(cnf), parse_bits(c)};
}

void check_compiled(const RocFormula &f) {
  const auto bp = compile(f);
  CHECK(!validate(bp));
  CHECK(is_oblivious(bp));
  CHECK(bp.width() <= 3);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n); ++x) {
    const BitString bits{x, f.n};
    CHECK(eval(bp, bits) == oracle::formula_accepts(f, x));
    CHECK(eval_formula(f, bits) == oracle::formula_accepts(f, x));
  }
  const Rational expected(BigInt(oracle::formula_count(f)), BigInt(1) << f.n);
  CHECK(oracle::as_rational(acceptance(f)) == expected);
  CHECK(acceptance_probability(bp) == acceptance(f));
}

} // namespace

TEST_CASE("acceptance of small formulas") {
  CHECK(acceptance(formula(3, {{1, 2}}, {}, "000")) == DyadicRational(1, 2));
  CHECK(acceptance(formula(3, {{1, 2, 3}}, {}, "101")) == DyadicRational(1, 3));
  CHECK(acceptance(formula(3, {}, {{1, 2}}, "000")) == DyadicRational(3, 2));
  // DNF 1 - (3/4)(1/2) = 5/8, CNF 7/8.
  CHECK(acceptance(formula(6, {{1, 2}, {3}}, {{4, 5, 6}}, "010101")) == DyadicRational(35, 6));
}

TEST_CASE("malformed formulas are rejected") {
  CHECK_THROWS_AS(check_formula(formula(3, {{1, 2}}, {{2}}, "000")), Error);
  CHECK_THROWS_AS(check_formula(formula(3, {{}}, {}, "000")), Error);
  CHECK_THROWS_AS(check_formula(formula(3, {{4}}, {}, "000")), Error);
  CHECK_THROWS_AS(check_formula(formula(3, {{1}}, {}, "0000")), Error);
  CHECK_THROWS_AS(compile(formula(3, {}, {}, "000")), Error);
}

TEST_CASE("compiled formulas: edge shapes") {
  SUBCASE("CNF only") { check_compiled(formula(5, {}, {{1, 2}, {3, 4, 5}}, "10110")); }
  SUBCASE("DNF only") { check_compiled(formula(5, {{1, 2}, {3}, {4, 5}}, {}, "10110")); }
  SUBCASE("last DNF term is a single variable") { check_compiled(formula(5, {{1, 2}, {3}}, {{4, 5}}, "01100")); }
  SUBCASE("single-variable DNF") { check_compiled(formula(3, {{2}}, {{1, 3}}, "111")); }
  SUBCASE("single variable only") { check_compiled(formula(1, {{1}}, {}, "1")); }
  SUBCASE("unused variables") { check_compiled(formula(7, {{6}}, {{2, 4}}, "0101010")); }
  SUBCASE("singleton clause") { check_compiled(formula(4, {{1, 2}}, {{3}, {4}}, "0000")); }
}

TEST_CASE("compiled formula roles and transitions") {
  const auto f = formula(5, {{1, 2}, {3}}, {{4, 5}}, "00000");
  const auto compiled = compile_with_roles(f);
  const auto &bp = compiled.program;
  REQUIRE(bp.depth() == 5);
  CHECK(compiled.roles.front() == std::vector<Role>{Role::V1});

  // Inside a multi-variable block the V2 node falls back to V1 on a mismatch.
  const auto v1 = compiled.index_of(1, Role::V1);
  const auto v2 = compiled.index_of(1, Role::V2);
  REQUIRE(v1);
  REQUIRE(v2);
  const auto &n2 = inner(bp.levels[1][*v2]);
  CHECK(n2.var == 2);
  CHECK(n2.e0 == *compiled.index_of(2, Role::V2));
  CHECK(n2.e1 == *compiled.index_of(2, Role::V1));

  // At the DNF/CNF boundary the distribution is (accepting DNF mass, rest).
  const auto dist = distributions(bp);
  const auto at_boundary = compiled.index_of(3, Role::V1);
  REQUIRE(at_boundary);
  CHECK(dist[3][*at_boundary] == DyadicRational(5, 3));

  const auto last = bp.levels.back();
  for (std::size_t v = 0; v < last.size(); ++v)
    CHECK(std::get<SinkNode>(last[v]).label == (compiled.roles.back()[v] == Role::V1));
}

TEST_CASE("random formulas clear their target and compile correctly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const unsigned n = 4 + seed % 7;
    const auto f = random_formula(n, Rational(1, 2), seed);
    CHECK(acceptance(f) >= Rational(1, 2));
    CHECK(f == random_formula(n, Rational(1, 2), seed));
    check_compiled(f);
  }
}
