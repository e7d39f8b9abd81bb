#include <doctest.h>

#include "oracles.hpp"
#include "robp/formula.hpp"
#include "robp/normalize.hpp"
#include "robp/random_program.hpp"

using namespace robp;

namespace {

void check_equivalent(const BranchingProgram &a, const BranchingProgram &b) {
  REQUIRE(a.n == b.n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.n); ++x)
    REQUIRE(eval(a, BitString{x, a.n}) == eval(b, BitString{x, a.n}));
}

/// p1 > 1/3, p2 < 1/2, p3 < 1/3 on every full level past the first.
bool padded_shape(const BranchingProgram &bp) {
  const auto dist = distributions(bp);
  for (std::size_t k = 2; k < dist.size(); ++k) {
    if (dist[k].size() != 3)
      continue;
    const auto p = [&](std::size_t i) { return oracle::as_rational(dist[k][i]); };
    if (!(p(0) > Rational(1, 3) && p(1) < Rational(1, 2) && p(2) < Rational(1, 3)))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("unreachable nodes and duplicates disappear") {
  BranchingProgram bp;
  bp.n = 2;
  // Node 2 on level 1 is unreachable; nodes 0 and 1 on level 1 are identical.
  bp.levels = {{InnerNode{1, 0, 1}},
               {InnerNode{2, 0, 1}, InnerNode{2, 0, 1}, InnerNode{2, 1, 1}},
               {SinkNode{true}, SinkNode{false}}};
  const auto traced = normalize_traced(bp);
  const auto &out = traced.program;
  CHECK(!validate(out));
  check_equivalent(bp, out);
  // Only x_2 matters: the x_1 level collapses and one test of x_2 remains.
  CHECK(out.depth() == 1);
  CHECK(inner(out.levels[0][0]).var == 2);
  CHECK(traced.origin.size() == out.levels.size());
}

TEST_CASE("identity levels collapse") {
  BranchingProgram bp;
  bp.n = 3;
  // Level 1 only relabels: each node sends both edges to a single distinct node.
  bp.levels = {{InnerNode{1, 0, 1}},
               {InnerNode{2, 1, 1}, InnerNode{2, 0, 0}},
               {InnerNode{3, 0, 1}, InnerNode{3, 1, 1}},
               {SinkNode{true}, SinkNode{false}}};
  const auto out = normalize(bp);
  check_equivalent(bp, out);
  CHECK(out.depth() < bp.depth());
  CHECK(is_level_sorted(out));
}

TEST_CASE("normalized random programs are equivalent and sorted") {
  std::size_t full_levels = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RobpProfile profile;
    profile.order = seed % 2 ? VariableOrder::PerNode : VariableOrder::Oblivious;
    const auto bp = random_robp(8, 3, seed, profile);
    const auto out = normalize(bp);
    CHECK(!validate(out));
    check_equivalent(bp, out);
    CHECK(is_level_sorted(out));
    CHECK(acceptance_probability(out) == acceptance_probability(bp));
    CHECK(normalize(out) == out);

    const auto padded = normalize(bp, {.pad_width = true});
    CHECK(!validate(padded));
    check_equivalent(bp, padded);
    CHECK(is_level_sorted(padded));
    CHECK(padded_shape(padded));
    for (std::size_t k = 2; k < padded.levels.size(); ++k)
      full_levels += padded.levels[k].size() == 3;
  }
  CHECK(full_levels >= 30);
}

TEST_CASE("padding compiled formulas keeps the level shape") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto f = random_formula(8, Rational(1, 4), seed);
    const auto padded = normalize(compile(f), {.pad_width = true});
    CHECK(!validate(padded));
    check_equivalent(compile(f), padded);
    CHECK(padded_shape(padded));
  }
}

TEST_CASE("origins point at real input nodes") {
  const auto bp = random_robp(7, 3, 11);
  const auto traced = normalize_traced(bp, {.pad_width = true});
  for (std::size_t k = 0; k < traced.origin.size(); ++k) {
    REQUIRE(traced.origin[k].size() == traced.program.levels[k].size());
    for (const auto &o : traced.origin[k]) {
      REQUIRE(o.level < bp.levels.size());
      CHECK(o.node < bp.levels[o.level].size());
    }
  }
}
