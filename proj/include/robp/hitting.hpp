/// @file  hitting.hpp
/// @brief Hitting-set construction (Hamming radius 3 around a small-bias
///        set), hit verification, and seeded campaigns

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robp/branching_program.hpp"
#include "robp/formula.hpp"
#include "robp/random_program.hpp"
#include "robp/sample_space.hpp"

namespace robp {

/// Parameters follow the richness formula applied to eps'^11 with
/// eps' = (5/6 + eps) / 2. Requires eps > 5/6.
struct LiteralMode {};
/// Explicit field degree; any eps in (0, 1).
struct PracticalMode {
  unsigned m = 8;
};
using BuildMode = std::variant<LiteralMode, PracticalMode>;

inline constexpr unsigned hitting_radius = 3;

struct HittingSet {
  BitStringSet base;  ///< the small-bias set A
  BitStringSet set;   ///< H = Hamming-radius-3 expansion of A
  GeneratorParams params;
};

/// Parameters literal mode would use; never throws FeasibilityError.
GeneratorParams literal_params(unsigned n, const Rational &epsilon,
                               std::uint64_t sample_cap = default_sample_cap);

/// Throws FeasibilityError (literal mode, set too large to materialize) and
/// InvalidArgument (literal mode with eps <= 5/6).
HittingSet build_hitting_set(unsigned n, const Rational &epsilon, const BuildMode &mode,
                             std::uint64_t sample_cap = default_sample_cap);

struct HitReport {
  DyadicRational acceptance;
  Rational epsilon;
  bool triggered = false; ///< acceptance >= epsilon
  std::optional<BitString> witness;
  std::optional<std::size_t> witness_index;
  std::size_t members_scanned = 0;
  bool hit = true; ///< vacuously true when not triggered
};

/// Exact acceptance; when it reaches epsilon, the first member of H (in set
/// order) that the program accepts.
HitReport hit_check(const BitStringSet &hitting_set, const BranchingProgram &bp, const Rational &epsilon);

enum class CampaignSource { RandomRobp, CompiledFormulas, Both };

struct CampaignConfig {
  unsigned n = 10;
  Rational epsilon = Rational(9, 10);
  std::size_t count = 0;
  std::uint64_t seed = 0;
  CampaignSource source = CampaignSource::Both;
  BuildMode set_params = PracticalMode{};
  std::uint64_t sample_cap = default_sample_cap;
};

struct CampaignInstance {
  std::size_t index = 0;
  CampaignSource kind = CampaignSource::RandomRobp; ///< RandomRobp or CompiledFormulas
  std::uint64_t seed = 0;
  std::optional<RocFormula> formula;
  BranchingProgram program;
  HitReport report;
};

struct CampaignReport {
  CampaignConfig config;
  std::optional<GeneratorParams> params;
  std::size_t base_size = 0;
  std::size_t hitting_set_size = 0;
  std::vector<CampaignInstance> instances;
  std::size_t generated = 0;
  std::size_t triggered = 0;
  std::size_t hit = 0;
  std::size_t missed = 0;
  bool partial = false;
  std::string partial_reason;
};

/// Seed of instance i, derived from the campaign seed.
std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t index);

/// Builds H from `config.set_params` and runs every instance against it.
/// With source Both, even indices are compiled formulas and odd indices are
/// random width-3 programs.
CampaignReport campaign(const CampaignConfig &config);
/// Same, against a caller-supplied hitting set.
CampaignReport campaign(const CampaignConfig &config, const BitStringSet &hitting_set);

} // namespace robp
