#include "robp/hitting.hpp"

#include "robp/error.hpp"

namespace robp {

GeneratorParams literal_params(unsigned n, const Rational &epsilon, std::uint64_t sample_cap) {
  const Rational five_sixths(5, 6);
  if (epsilon <= five_sixths || epsilon >= 1)
    throw Error(ErrorKind::InvalidArgument, "literal mode needs 5/6 < epsilon < 1, got " + to_string(epsilon));
  const Rational inner = (five_sixths + epsilon) / 2;
  Rational richness = 1;
  for (int i = 0; i < 11; ++i)
    richness *= inner;
  return richness_params(richness, n, sample_cap);
}

HittingSet build_hitting_set(unsigned n, const Rational &epsilon, const BuildMode &mode, std::uint64_t sample_cap) {
  GeneratorParams params;
  if (std::holds_alternative<LiteralMode>(mode)) {
    params = literal_params(n, epsilon, sample_cap);
    if (!params.feasible_at_desk_scale)
      throw Error(ErrorKind::FeasibilityError,
                  "field degree m = " + std::to_string(params.m) + " gives a set of 2^" +
                      std::to_string(2 * params.m) + " strings (C = " + std::to_string(params.C) +
                      ", k = " + std::to_string(params.k) + "), above the cap of " + std::to_string(sample_cap));
  } else {
    params = params_for_degree(epsilon, n, std::get<PracticalMode>(mode).m, sample_cap);
  }
  HittingSet out{aghp_powering(n, static_cast<unsigned>(params.m), *params.modulus, sample_cap), {}, params};
  out.set = expand(out.base, hitting_radius);
  return out;
}

HitReport hit_check(const BitStringSet &hitting_set, const BranchingProgram &bp, const Rational &epsilon) {
  if (hitting_set.n() != bp.n)
    throw Error(ErrorKind::LengthMismatch, "hitting set strings have " + std::to_string(hitting_set.n()) +
                                               " bits, program expects " + std::to_string(bp.n));
  HitReport report;
  report.acceptance = acceptance_probability(bp);
  report.epsilon = epsilon;
  report.triggered = report.acceptance >= epsilon;
  if (!report.triggered)
    return report;
  report.hit = false;
  for (std::size_t i = 0; i < hitting_set.size(); ++i) {
    ++report.members_scanned;
    if (eval(bp, hitting_set.at(i))) {
      report.hit = true;
      report.witness = hitting_set.at(i);
      report.witness_index = i;
      break;
    }
  }
  return report;
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

CampaignReport run(const CampaignConfig &config, const BitStringSet &hitting_set, CampaignReport report) {
  report.config = config;
  report.hitting_set_size = hitting_set.size();
  for (std::size_t i = 0; i < config.count; ++i) {
    CampaignInstance inst;
    inst.index = i;
    inst.seed = instance_seed(config.seed, i);
    inst.kind = config.source == CampaignSource::Both
                    ? (i % 2 == 0 ? CampaignSource::CompiledFormulas : CampaignSource::RandomRobp)
                    : config.source;
    try {
      if (inst.kind == CampaignSource::CompiledFormulas) {
        inst.formula = random_formula(config.n, config.epsilon, inst.seed);
        inst.program = compile(*inst.formula);
      } else {
        RobpProfile profile;
        profile.order = (inst.seed >> 63) ? VariableOrder::PerNode : VariableOrder::Oblivious;
        profile.high_acceptance_fraction = 1.0;
        profile.epsilon = config.epsilon;
        inst.program = random_robp(config.n, 3, inst.seed, profile);
      }
    } catch (const Error &e) {
      report.partial = true;
      report.partial_reason = "instance " + std::to_string(i) + ": " + e.what();
      break;
    }
    inst.report = hit_check(hitting_set, inst.program, config.epsilon);
    ++report.generated;
    if (inst.report.triggered) {
      ++report.triggered;
      ++(inst.report.hit ? report.hit : report.missed);
    }
    report.instances.push_back(std::move(inst));
  }
  return report;
}

} // namespace

CampaignReport campaign(const CampaignConfig &config) {
  if (config.n > 16)
    throw Error(ErrorKind::InvalidArgument, "campaigns run at n <= 16");
  HittingSet h = build_hitting_set(config.n, config.epsilon, config.set_params, config.sample_cap);
  CampaignReport report;
  report.params = h.params;
  report.base_size = h.base.size();
  return run(config, h.set, std::move(report));
}

CampaignReport campaign(const CampaignConfig &config, const BitStringSet &hitting_set) {
  if (config.n > 16)
    throw Error(ErrorKind::InvalidArgument, "campaigns run at n <= 16");
  return run(config, hitting_set, CampaignReport{});
}

} // namespace robp
