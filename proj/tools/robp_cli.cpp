// robp: command-line front end for building hitting sets and checking
// read-once branching programs against them.
//
// Exit codes: 0 pass/complete, 1 counterexample or miss found,
// 2 usage or validation error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "robp/hitting.hpp"
#include "robp/io.hpp"
#include "robp/normalize.hpp"
#include "robp/richness.hpp"

namespace {

using robp::io::json;

constexpr int exit_ok = 0;
constexpr int exit_found = 1;
constexpr int exit_usage = 2;

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

json program_summary(const robp::BranchingProgram &bp) {
  json out;
  out["n"] = bp.n;
  out["depth"] = bp.depth();
  out["width"] = bp.width();
  out["oblivious"] = robp::is_oblivious(bp);
  out["acceptance"] = robp::io::to_json(robp::acceptance_probability(bp));
  return out;
}

robp::BranchingProgram load_program(const std::string &path) {
  robp::BranchingProgram bp = robp::io::program_from_json(robp::io::read_json_file(path));
  robp::ensure_valid(bp, robp::unbounded_width);
  return bp;
}

struct Options {
  unsigned n = 0;
  std::string epsilon;
  std::string mode;
  std::optional<unsigned> m;
  std::string out;
  std::string formula;
  std::string bp;
  bool pad_width = false;
  std::string set;
  std::optional<unsigned> k;
  bool weak = false;
  unsigned max_r = 3;
  std::string config;
};

int run_gen(const Options &o) {
  robp::BuildMode mode;
  if (!o.mode.empty() && o.m)
    throw CLI::ValidationError("gen", "--mode literal and --m are mutually exclusive");
  if (!o.mode.empty()) {
    if (o.mode != "literal")
      throw CLI::ValidationError("--mode", "only 'literal' is supported");
    mode = robp::LiteralMode{};
  } else if (o.m) {
    mode = robp::PracticalMode{*o.m};
  } else {
    throw CLI::ValidationError("gen", "one of --mode literal or --m M is required");
  }
  const robp::Rational eps = robp::parse_rational(o.epsilon);
  const robp::HittingSet h = robp::build_hitting_set(o.n, eps, mode);
  robp::io::write_set_file(o.out, h.set);
  json out;
  out["command"] = "gen";
  out["params"] = robp::io::to_json(h.params);
  out["base_size"] = h.base.size();
  out["hitting_set_size"] = h.set.size();
  out["out"] = o.out;
  emit(out);
  return exit_ok;
}

int run_compile(const Options &o) {
  const robp::RocFormula f = robp::io::formula_from_json(robp::io::read_json_file(o.formula));
  const robp::BranchingProgram bp = robp::compile(f);
  robp::io::write_text_file(o.out, robp::io::to_json(bp).dump(2) + "\n");
  json out;
  out["command"] = "compile";
  out["program"] = program_summary(bp);
  out["formula_acceptance"] = robp::io::to_json(robp::acceptance(f));
  out["out"] = o.out;
  emit(out);
  return exit_ok;
}

int run_accept(const Options &o) {
  const robp::BranchingProgram bp = load_program(o.bp);
  json out;
  out["command"] = "accept";
  out["program"] = program_summary(bp);
  emit(out);
  return exit_ok;
}

int run_normalize(const Options &o) {
  const robp::BranchingProgram bp = load_program(o.bp);
  robp::NormalizeOptions opts;
  opts.pad_width = o.pad_width;
  const robp::BranchingProgram result = robp::normalize(bp, opts);
  robp::io::write_text_file(o.out, robp::io::to_json(result).dump(2) + "\n");
  json out;
  out["command"] = "normalize";
  out["input"] = program_summary(bp);
  out["output"] = program_summary(result);
  out["level_sorted"] = robp::is_level_sorted(result);
  out["out"] = o.out;
  emit(out);
  return exit_ok;
}

int run_bias_check(const Options &o) {
  const robp::BitStringSet set = robp::io::read_set_file(o.set);
  const robp::BiasResult bias = robp::max_bias(set);
  json out;
  out["command"] = "bias-check";
  out["n"] = set.n();
  out["distinct_members"] = set.size();
  out["total_weight"] = set.total_weight();
  out["max_bias"] = robp::to_string(bias.value);
  out["max_bias_value"] = robp::to_double(bias.value);
  out["worst_mask"] = robp::format_bits(bias.worst_mask, set.n());
  if (o.k) {
    const robp::DeviationResult dev = robp::kwise_deviation(set, *o.k);
    out["k"] = *o.k;
    out["kwise_deviation"] = robp::to_string(dev.value);
    out["kwise_deviation_value"] = robp::to_double(dev.value);
    out["deviation_within_bias"] = dev.value <= bias.value;
  }
  emit(out);
  return exit_ok;
}

int run_rich_check(const Options &o) {
  const robp::BitStringSet set = robp::io::read_set_file(o.set);
  robp::RichnessBudget budget;
  budget.max_r = o.max_r;
  const robp::Rational eps = robp::parse_rational(o.epsilon);
  const robp::Verdict verdict = o.weak ? robp::check_weak_rich(set, eps, budget) : robp::check_rich(set, eps, budget);
  json out = robp::io::to_json(verdict, budget, o.weak);
  emit(out);
  return verdict.pass ? exit_ok : exit_found;
}

int run_hit_check(const Options &o) {
  const robp::BitStringSet set = robp::io::read_set_file(o.set);
  const robp::BranchingProgram bp = load_program(o.bp);
  const robp::HitReport report = robp::hit_check(set, bp, robp::parse_rational(o.epsilon));
  emit(robp::io::to_json(report));
  return report.hit ? exit_ok : exit_found;
}

int run_campaign(const Options &o) {
  const robp::CampaignConfig config = robp::io::campaign_config_from_json(robp::io::read_json_file(o.config));
  const robp::CampaignReport report = robp::campaign(config);
  emit(robp::io::to_json(report));
  return report.missed == 0 ? exit_ok : exit_found;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hitting sets for width-3 read-once branching programs"};
  app.require_subcommand(1);
  Options o;

  auto *gen = app.add_subcommand("gen", "Build H = radius-3 expansion of a small-bias set");
  gen->add_option("--n", o.n, "String length")->required();
  gen->add_option("--epsilon", o.epsilon, "Acceptance threshold")->required();
  gen->add_option("--mode", o.mode, "'literal' derives the field degree from epsilon");
  gen->add_option("--m", o.m, "Explicit field degree");
  gen->add_option("--out", o.out, "Output set file")->required();

  auto *compile = app.add_subcommand("compile", "Compile a DNF/CNF formula into a width-3 program");
  compile->add_option("--formula", o.formula)->required();
  compile->add_option("--out", o.out)->required();

  auto *accept = app.add_subcommand("accept", "Exact acceptance probability of a program");
  accept->add_option("--bp", o.bp)->required();

  auto *normalize = app.add_subcommand("normalize", "Normalize a program");
  normalize->add_option("--bp", o.bp)->required();
  normalize->add_flag("--pad-width", o.pad_width, "Split nodes up to width 3");
  normalize->add_option("--out", o.out)->required();

  auto *bias = app.add_subcommand("bias-check", "Maximum bias and k-wise deviation of a set");
  bias->add_option("--set", o.set)->required();
  bias->add_option("--k", o.k);

  auto *rich = app.add_subcommand("rich-check", "Bounded richness search");
  rich->add_option("--set", o.set)->required();
  rich->add_option("--epsilon", o.epsilon)->required();
  rich->add_flag("--weak", o.weak, "Check weak richness (DNF/CNF pairs)");
  rich->add_option("--max-r", o.max_r, "Largest number of clauses");

  auto *hit = app.add_subcommand("hit-check", "Check whether a set hits a program");
  hit->add_option("--set", o.set)->required();
  hit->add_option("--bp", o.bp)->required();
  hit->add_option("--epsilon", o.epsilon)->required();

  auto *camp = app.add_subcommand("campaign", "Run a seeded hitting campaign");
  camp->add_option("--config", o.config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*compile) return run_compile(o);
    if (*accept) return run_accept(o);
    if (*normalize) return run_normalize(o);
    if (*bias) return run_bias_check(o);
    if (*rich) return run_rich_check(o);
    if (*hit) return run_hit_check(o);
    if (*camp) return run_campaign(o);
  } catch (const CLI::ValidationError &e) {
    json err;
    err["error"] = "UsageError";
    err["message"] = e.what();
    emit(err);
    return exit_usage;
  } catch (const robp::Error &e) {
    json err;
    err["error"] = std::string(robp::to_string(e.kind()));
    err["message"] = e.what();
    emit(err);
    return exit_usage;
  }
  return exit_usage;
}
