#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "robp/gf2.hpp"
#include "robp/richness.hpp"

using namespace robp;

TEST_CASE("condition and probabilities of a single instance") {
  const RichnessInstance inst{6, {1}, {{2, 3}, {4}}, parse_bits("000000"), Rational(1, 4)};
  CHECK(satisfies_cond(parse_bits("010100"), inst));
  CHECK(!satisfies_cond(parse_bits("110100"), inst));
  CHECK(!satisfies_cond(parse_bits("010000"), inst));
  CHECK(!satisfies_cond(parse_bits("000100"), inst));
  CHECK(instance_probability(inst) == DyadicRational(3, 3));
  CHECK(query_probability(inst) == DyadicRational(1, 1));
  CHECK_THROWS_AS(satisfies_cond(parse_bits("0101"), inst), Error);
}

TEST_CASE("the full cube is rich") {
  for (unsigned n : {4u, 6u}) {
    const auto v = check_rich(BitStringSet::cube(n), Rational(3, 5));
    CHECK(v.pass);
    CHECK(v.search_exhaustive);
    CHECK(v.instances_checked > 0);
    const auto w = check_weak_rich(BitStringSet::cube(n), Rational(3, 5));
    CHECK(w.pass);
    CHECK(w.search_exhaustive);
  }
}

TEST_CASE("a single string is not rich, and the counterexample holds up") {
  BitStringSet single(6);
  single.insert(0b010011);
  const auto v = check_rich(single, Rational(3, 5));
  CHECK(!v.pass);
  REQUIRE(v.counterexample);
  CHECK(oracle::refutes(single, *v.counterexample));
  for (std::uint64_t a : single.members())
    CHECK(!satisfies_cond(BitString{a, 6}, *v.counterexample));

  const auto w = check_weak_rich(single, Rational(3, 5));
  CHECK(!w.pass);
  REQUIRE(w.weak_counterexample);
  CHECK(oracle::refutes(single, *w.weak_counterexample));
}

TEST_CASE("counterexamples of random sparse sets are genuine") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BitStringSet set(6);
    for (int i = 0; i < 10; ++i)
      set.insert(rng() & 63);
    const auto v = check_rich(set, Rational(1, 2));
    if (!v.pass) {
      REQUIRE(v.counterexample);
      CHECK(oracle::refutes(set, *v.counterexample));
    }
    const auto w = check_weak_rich(set, Rational(1, 2));
    if (!w.pass) {
      REQUIRE(w.weak_counterexample);
      CHECK(oracle::refutes(set, *w.weak_counterexample));
    }
  }
}

TEST_CASE("a small budget stops the search without a verdict") {
  RichnessBudget budget;
  budget.max_checks = 10;
  const auto v = check_rich(BitStringSet::cube(6), Rational(1, 2), budget);
  CHECK(v.pass);
  CHECK(!v.search_exhaustive);
  CHECK(v.instances_checked == 10);
}

TEST_CASE("inputs past 30 bits are refused") {
  BitStringSet wide(31);
  wide.insert(0);
  CHECK_THROWS_AS(check_rich(wide, Rational(1, 2)), Error);
}
