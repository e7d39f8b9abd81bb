#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "robp/formula.hpp"
#include "robp/hitting.hpp"
#include "robp/random_program.hpp"

using namespace robp;

TEST_CASE("practical hitting set is the radius-3 expansion of the base") {
  const auto h = build_hitting_set(12, Rational(9, 10), PracticalMode{6});
  CHECK(h.params.m == 6);
  CHECK(h.base.total_weight() == 4096);
  for (std::uint64_t a : h.base.members())
    CHECK(h.set.contains(a));
  for (std::uint64_t x : h.set.members()) {
    unsigned nearest = 64;
    for (std::uint64_t a : h.base.members())
      nearest = std::min(nearest, hamming_distance(a, x));
    CHECK(nearest <= 3);
  }
  CHECK(h.set.size() == expand(h.base, 3).size());
}

TEST_CASE("literal mode parameters") {
  // eps' = (5/6 + 9/10) / 2 = 13/15; the formula then runs at eps'^11.
  const long double eps11 = std::pow(13.0L / 15.0L, 11.0L);
  const long double threshold = std::pow(2.0L / eps11 * std::log(1.0L / eps11), 2.0L);
  std::uint64_t c = 1;
  while (static_cast<long double>(c) <= threshold)
    c += 2;
  const auto p = literal_params(16, Rational(9, 10));
  CHECK(p.C == c);
  CHECK(p.C == 231);
  CHECK(p.k == (c + 2) * 4);
  BigInt bound = 15;
  for (std::uint64_t e = 0; e < c + 3; ++e)
    bound *= 16;
  CHECK(p.m == msb(bound) + 1);
  CHECK(p.m == 940);
  CHECK(!p.feasible_at_desk_scale);

  try {
    build_hitting_set(16, Rational(9, 10), LiteralMode{});
    FAIL("expected FeasibilityError");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::FeasibilityError);
    CHECK(std::string(e.what()).find("2^1880") != std::string::npos);
  }
  CHECK_THROWS_AS(build_hitting_set(16, Rational(4, 5), LiteralMode{}), Error);
}

TEST_CASE("hit_check reports witnesses and vacuous passes") {
  const auto h = build_hitting_set(10, Rational(1, 2), PracticalMode{8});
  const RocFormula f{10, {{1, 2}, {3}}, {{4, 5, 6}}, parse_bits("0101010101")};
  const auto report = hit_check(h.set, compile(f), Rational(1, 2));
  CHECK(report.triggered);
  CHECK(report.hit);
  REQUIRE(report.witness);
  CHECK(eval_formula(f, *report.witness));
  CHECK(h.set.at(*report.witness_index) == *report.witness);

  const auto low = hit_check(h.set, compile(f), Rational(9, 10));
  CHECK(!low.triggered);
  CHECK(low.hit);
  CHECK(low.members_scanned == 0);

  // A set that misses every accepted input.
  BitStringSet bad(10);
  bad.insert(0);
  const RocFormula clause{10, {}, {{1}}, parse_bits("0000000000")};
  const auto miss = hit_check(bad, compile(clause), Rational(1, 2));
  CHECK(miss.triggered);
  CHECK(!miss.hit);
  CHECK(!miss.witness);
  CHECK(miss.members_scanned == 1);
  CHECK_THROWS_AS(hit_check(BitStringSet::cube(4), compile(clause), Rational(1, 2)), Error);
}

TEST_CASE("small campaign") {
  CampaignConfig config;
  config.n = 8;
  config.epsilon = Rational(9, 10);
  config.count = 20;
  config.seed = 5;
  config.set_params = PracticalMode{4};
  const auto report = campaign(config);
  CHECK(report.generated == 20);
  CHECK(report.instances.size() == 20);
  CHECK(report.hit + report.missed == report.triggered);
  CHECK(!report.partial);
  for (const auto &inst : report.instances) {
    CHECK(inst.seed == instance_seed(config.seed, inst.index));
    CHECK(inst.kind == (inst.index % 2 == 0 ? CampaignSource::CompiledFormulas : CampaignSource::RandomRobp));
    CHECK(inst.formula.has_value() == (inst.kind == CampaignSource::CompiledFormulas));
    CHECK(inst.report.triggered);
  }
  const auto again = campaign(config);
  for (std::size_t i = 0; i < report.instances.size(); ++i)
    CHECK(again.instances[i].program == report.instances[i].program);

  // Against a one-string set every triggered instance that rejects it is a miss.
  BitStringSet bad(8);
  bad.insert(0);
  const auto misses = campaign(config, bad);
  std::size_t expected = 0;
  for (const auto &inst : misses.instances)
    expected += !eval(inst.program, BitString{0, 8});
  CHECK(misses.missed == expected);
}
