/// @file  io.hpp
/// @brief JSON and text interchange formats

#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "robp/branching_program.hpp"
#include "robp/formula.hpp"
#include "robp/hitting.hpp"
#include "robp/richness.hpp"
#include "robp/sample_space.hpp"

namespace robp::io {

using json = nlohmann::ordered_json;

// Programs: {"n": int, "levels": [[node...]...]}, node = {"var","e0","e1"} or
// {"sink": 0|1}; edges are 0-based, variables 1-based.
json to_json(const BranchingProgram &bp);
/// Throws ParseError, or InvalidProgramError(OutDegreeViolation) for an inner
/// node missing an edge.
BranchingProgram program_from_json(const json &j);

// Formulas: {"n": int, "Q": [[int...]...], "R": [[int...]...], "c": "0101..."}.
json to_json(const RocFormula &f);
RocFormula formula_from_json(const json &j);

json to_json(const DyadicRational &value);
json to_json(const GeneratorParams &params);
json to_json(const RichnessInstance &inst);
json to_json(const WeakRichnessInstance &inst);
json to_json(const Verdict &verdict, const RichnessBudget &budget, bool weak);
json to_json(const HitReport &report);
json to_json(const CampaignConfig &config);
json to_json(const CampaignReport &report);
CampaignConfig campaign_config_from_json(const json &j);

/// Accepts a JSON string ("9/10", "0.9") or number.
Rational rational_from_json(const json &j);

// Sets: one '0'/'1' string per line, LF-terminated. A member with
// multiplicity w is written on w consecutive lines.
void write_set(std::ostream &out, const BitStringSet &set);
/// An empty stream needs `n_hint` to know the string length.
BitStringSet read_set(std::istream &in, std::optional<unsigned> n_hint = std::nullopt);

json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);
BitStringSet read_set_file(const std::filesystem::path &path);
void write_set_file(const std::filesystem::path &path, const BitStringSet &set);

} // namespace robp::io
