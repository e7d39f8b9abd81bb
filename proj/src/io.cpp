#include "robp/io.hpp"

#include <fstream>
#include <sstream>

namespace robp::io {

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T> T get_as(const json &j, const char *what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception &) {
    parse_error(std::string("field '") + what + "' has the wrong type");
  }
}

json classes_to_json(const std::vector<IndexSet> &classes) {
  json out = json::array();
  for (const auto &cls : classes)
    out.push_back(cls);
  return out;
}

std::vector<IndexSet> classes_from_json(const json &j, const char *what) {
  return get_as<std::vector<IndexSet>>(j, what);
}

std::string source_name(CampaignSource s) {
  switch (s) {
  case CampaignSource::RandomRobp: return "random_robp";
  case CampaignSource::CompiledFormulas: return "compiled_formulas";
  case CampaignSource::Both: return "both";
  }
  return "unknown";
}

} // namespace

json to_json(const BranchingProgram &bp) {
  json levels = json::array();
  for (const auto &level : bp.levels) {
    json nodes = json::array();
    for (const auto &node : level) {
      json out;
      if (const auto *sink = std::get_if<SinkNode>(&node)) {
        out["sink"] = sink->label ? 1 : 0;
      } else {
        const auto &in = std::get<InnerNode>(node);
        out["var"] = in.var;
        out["e0"] = in.e0;
        out["e1"] = in.e1;
      }
      nodes.push_back(std::move(out));
    }
    levels.push_back(std::move(nodes));
  }
  json out;
  out["n"] = bp.n;
  out["levels"] = std::move(levels);
  return out;
}

BranchingProgram program_from_json(const json &j) {
  BranchingProgram bp;
  bp.n = get_as<unsigned>(field(j, "n"), "n");
  const json &levels = field(j, "levels");
  if (!levels.is_array())
    parse_error("'levels' must be an array");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!levels[k].is_array())
      parse_error("level " + std::to_string(k) + " must be an array");
    Level level;
    for (std::size_t v = 0; v < levels[k].size(); ++v) {
      const json &node = levels[k][v];
      if (!node.is_object())
        parse_error("node must be an object");
      if (node.contains("sink")) {
        const int label = get_as<int>(node.at("sink"), "sink");
        if (label != 0 && label != 1)
          parse_error("sink label must be 0 or 1");
        level.push_back(SinkNode{label == 1});
      } else if (node.contains("var")) {
        if (!node.contains("e0") || !node.contains("e1"))
          throw InvalidProgramError(ValidationError{ValidationError::Kind::OutDegreeViolation, k, v, 0,
                                                    "inner node needs both e0 and e1"});
        level.push_back(InnerNode{get_as<unsigned>(node.at("var"), "var"), get_as<std::uint32_t>(node.at("e0"), "e0"),
                                  get_as<std::uint32_t>(node.at("e1"), "e1")});
      } else {
        parse_error("node needs 'sink' or 'var'");
      }
    }
    bp.levels.push_back(std::move(level));
  }
  return bp;
}

json to_json(const RocFormula &f) {
  json out;
  out["n"] = f.n;
  out["Q"] = classes_to_json(f.dnf);
  out["R"] = classes_to_json(f.cnf);
  out["c"] = format_bits(f.c);
  return out;
}

RocFormula formula_from_json(const json &j) {
  RocFormula f;
  f.n = get_as<unsigned>(field(j, "n"), "n");
  f.dnf = classes_from_json(field(j, "Q"), "Q");
  f.cnf = classes_from_json(field(j, "R"), "R");
  f.c = parse_bits(get_as<std::string>(field(j, "c"), "c"));
  check_formula(f);
  return f;
}

json to_json(const DyadicRational &value) {
  json out;
  out["fraction"] = value.to_string();
  out["numerator"] = value.numerator().str();
  out["exponent"] = value.exponent();
  out["value"] = value.to_double();
  return out;
}

json to_json(const GeneratorParams &p) {
  json out;
  out["n"] = p.n;
  out["epsilon"] = to_string(p.epsilon);
  out["c_threshold"] = p.c_threshold;
  out["C"] = p.C;
  out["k"] = p.k;
  out["beta"] = to_string(p.beta);
  out["m"] = p.m;
  out["modulus"] = p.modulus ? json(p.modulus->to_string()) : json(nullptr);
  out["set_size"] = p.set_size.str();
  out["log2_set_size"] = 2 * p.m;
  out["feasible_at_desk_scale"] = p.feasible_at_desk_scale;
  return out;
}

json to_json(const RichnessInstance &inst) {
  json out;
  out["n"] = inst.n;
  out["Q"] = inst.q;
  out["R"] = classes_to_json(inst.r);
  out["c"] = format_bits(inst.c);
  out["epsilon"] = to_string(inst.epsilon);
  return out;
}

json to_json(const WeakRichnessInstance &inst) {
  json out = to_json(inst.formula);
  out["epsilon"] = to_string(inst.epsilon);
  return out;
}

json to_json(const Verdict &verdict, const RichnessBudget &budget, bool weak) {
  json out;
  out["outcome"] = verdict.pass ? "pass" : "fail";
  out["mode"] = weak ? "weak" : "rich";
  if (verdict.counterexample)
    out["counterexample"] = to_json(*verdict.counterexample);
  else if (verdict.weak_counterexample)
    out["counterexample"] = to_json(*verdict.weak_counterexample);
  else
    out["counterexample"] = nullptr;
  out["instances_checked"] = verdict.instances_checked;
  out["witnesses_checked"] = verdict.witnesses_checked;
  json b;
  b["max_r"] = budget.max_r;
  b["max_q_size"] = budget.max_q_size ? json(*budget.max_q_size) : json(nullptr);
  b["max_q_terms"] = budget.max_q_terms;
  b["max_checks"] = budget.max_checks;
  out["budget"] = std::move(b);
  out["search_exhaustive"] = verdict.search_exhaustive;
  return out;
}

json to_json(const HitReport &report) {
  json out;
  out["acceptance"] = to_json(report.acceptance);
  out["epsilon"] = to_string(report.epsilon);
  out["triggered"] = report.triggered;
  out["hit"] = report.hit;
  out["witness"] = report.witness ? json(format_bits(*report.witness)) : json(nullptr);
  out["witness_index"] = report.witness_index ? json(*report.witness_index) : json(nullptr);
  out["members_scanned"] = report.members_scanned;
  return out;
}

json to_json(const CampaignConfig &config) {
  json out;
  out["n"] = config.n;
  out["epsilon"] = to_string(config.epsilon);
  out["count"] = config.count;
  out["seed"] = config.seed;
  out["source"] = source_name(config.source);
  json set;
  if (std::holds_alternative<LiteralMode>(config.set_params))
    set["mode"] = "literal";
  else
    set["m"] = std::get<PracticalMode>(config.set_params).m;
  out["set_params"] = std::move(set);
  out["sample_cap"] = config.sample_cap;
  return out;
}

json to_json(const CampaignReport &report) {
  json out;
  out["config"] = to_json(report.config);
  out["params"] = report.params ? to_json(*report.params) : json(nullptr);
  out["base_size"] = report.base_size;
  out["hitting_set_size"] = report.hitting_set_size;
  json counts;
  counts["generated"] = report.generated;
  counts["triggered"] = report.triggered;
  counts["hit"] = report.hit;
  counts["missed"] = report.missed;
  out["counts"] = std::move(counts);
  out["partial"] = report.partial;
  out["partial_reason"] = report.partial_reason;
  json instances = json::array();
  json misses = json::array();
  for (const auto &inst : report.instances) {
    json i;
    i["index"] = inst.index;
    i["kind"] = source_name(inst.kind);
    i["seed"] = inst.seed;
    i["report"] = to_json(inst.report);
    instances.push_back(i);
    if (inst.report.triggered && !inst.report.hit) {
      i["program"] = to_json(inst.program);
      if (inst.formula)
        i["formula"] = to_json(*inst.formula);
      misses.push_back(std::move(i));
    }
  }
  out["instances"] = std::move(instances);
  out["misses"] = std::move(misses);
  return out;
}

Rational rational_from_json(const json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number())
    return parse_rational(j.dump());
  parse_error("expected a number or a rational string");
}

CampaignConfig campaign_config_from_json(const json &j) {
  CampaignConfig c;
  c.n = get_as<unsigned>(field(j, "n"), "n");
  c.epsilon = rational_from_json(field(j, "epsilon"));
  c.count = get_as<std::size_t>(field(j, "count"), "count");
  c.seed = get_as<std::uint64_t>(field(j, "seed"), "seed");
  const std::string source = get_as<std::string>(field(j, "source"), "source");
  if (source == "random_robp")
    c.source = CampaignSource::RandomRobp;
  else if (source == "compiled_formulas")
    c.source = CampaignSource::CompiledFormulas;
  else if (source == "both")
    c.source = CampaignSource::Both;
  else
    parse_error("unknown source '" + source + "'");
  const json &set = field(j, "set_params");
  if (set.contains("mode") && set.at("mode") == "literal")
    c.set_params = LiteralMode{};
  else
    c.set_params = PracticalMode{get_as<unsigned>(field(set, "m"), "m")};
  if (j.contains("sample_cap"))
    c.sample_cap = get_as<std::uint64_t>(j.at("sample_cap"), "sample_cap");
  return c;
}

void write_set(std::ostream &out, const BitStringSet &set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const std::string line = format_bits(set.members()[i], set.n());
    for (std::uint64_t w = 0; w < set.weights()[i]; ++w)
      out << line << '\n';
  }
}

BitStringSet read_set(std::istream &in, std::optional<unsigned> n_hint) {
  std::optional<BitStringSet> set;
  if (n_hint)
    set.emplace(*n_hint);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    const BitString bits = parse_bits(line);
    if (!set)
      set.emplace(bits.n);
    if (bits.n != set->n())
      parse_error("line " + std::to_string(line_no) + " has length " + std::to_string(bits.n) + ", expected " +
                  std::to_string(set->n()));
    set->insert(bits.word);
  }
  if (!set)
    parse_error("empty set file and no length given");
  return std::move(*set);
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
}

BitStringSet read_set_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path.string());
  return read_set(in);
}

void write_set_file(const std::filesystem::path &path, const BitStringSet &set) {
  std::ostringstream os;
  write_set(os, set);
  write_text_file(path, os.str());
}

} // namespace robp::io
