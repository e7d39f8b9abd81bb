#include "robp/branching_program.hpp"

#include <algorithm>
#include <sstream>

namespace robp {

std::size_t BranchingProgram::width() const noexcept {
  std::size_t w = 0;
  for (const auto &level : levels)
    w = std::max(w, level.size());
  return w;
}

BranchingProgram constant_program(unsigned n, bool value) {
  return BranchingProgram{n, {Level{SinkNode{value}}}};
}

bool is_oblivious(const BranchingProgram &bp) {
  for (const auto &level : bp.levels) {
    std::optional<unsigned> var;
    for (const auto &node : level) {
      if (is_sink(node))
        continue;
      if (var && *var != inner(node).var)
        return false;
      var = inner(node).var;
    }
  }
  return true;
}

std::string_view to_string(ValidationError::Kind kind) noexcept {
  using K = ValidationError::Kind;
  switch (kind) {
  case K::NotLeveled: return "NotLeveled";
  case K::OutDegreeViolation: return "OutDegreeViolation";
  case K::SinkPlacement: return "SinkPlacement";
  case K::ReadOnceViolation: return "ReadOnceViolation";
  case K::WidthExceeded: return "WidthExceeded";
  case K::VariableOutOfRange: return "VariableOutOfRange";
  }
  return "Unknown";
}

std::string ValidationError::message() const {
  std::ostringstream os;
  os << to_string(kind) << " at level " << level << ", node " << node;
  if (kind == Kind::ReadOnceViolation || kind == Kind::VariableOutOfRange)
    os << " (x" << var << ")";
  if (!detail.empty())
    os << ": " << detail;
  return os.str();
}

std::optional<ValidationError> validate(const BranchingProgram &bp, std::size_t max_width) {
  using K = ValidationError::Kind;
  if (bp.n > max_bits)
    return ValidationError{K::VariableOutOfRange, 0, 0, bp.n, "at most 64 variables are supported"};
  if (bp.levels.empty())
    return ValidationError{K::NotLeveled, 0, 0, 0, "program has no levels"};
  if (bp.levels.front().size() != 1)
    return ValidationError{K::NotLeveled, 0, 0, 0, "level 0 must hold exactly the source"};

  const std::size_t last = bp.levels.size() - 1;
  // Only paths from the source count, so unreachable nodes pass nothing on.
  std::vector<std::uint64_t> incoming(1, 0);
  std::vector<bool> reachable(1, true);
  for (std::size_t k = 0; k <= last; ++k) {
    const Level &level = bp.levels[k];
    if (level.empty())
      return ValidationError{K::NotLeveled, k, 0, 0, "empty level"};
    if (level.size() > max_width)
      return ValidationError{K::WidthExceeded, k, level.size(), 0,
                             std::to_string(level.size()) + " nodes exceed width " + std::to_string(max_width)};
    const std::size_t next_size = k < last ? bp.levels[k + 1].size() : 0;
    std::vector<std::uint64_t> next(next_size, 0);
    std::vector<bool> next_reachable(next_size, false);
    for (std::size_t v = 0; v < level.size(); ++v) {
      if (is_sink(level[v])) {
        if (k != last)
          return ValidationError{K::SinkPlacement, k, v, 0, "sink before the last level"};
        continue;
      }
      if (k == last)
        return ValidationError{K::SinkPlacement, k, v, 0, "inner node on the last level"};
      const InnerNode &node = inner(level[v]);
      if (node.var < 1 || node.var > bp.n)
        return ValidationError{K::VariableOutOfRange, k, v, node.var, ""};
      if (node.e0 >= next_size || node.e1 >= next_size)
        return ValidationError{K::NotLeveled, k, v, 0, "edge target outside the next level"};
      if (!reachable[v])
        continue;
      const std::uint64_t bit = std::uint64_t{1} << (node.var - 1);
      if (incoming[v] & bit)
        return ValidationError{K::ReadOnceViolation, k, v, node.var, "variable already queried on a path into this node"};
      next[node.e0] |= incoming[v] | bit;
      next[node.e1] |= incoming[v] | bit;
      next_reachable[node.e0] = next_reachable[node.e1] = true;
    }
    incoming = std::move(next);
    reachable = std::move(next_reachable);
  }
  return std::nullopt;
}

void ensure_valid(const BranchingProgram &bp, std::size_t max_width) {
  if (auto error = validate(bp, max_width))
    throw InvalidProgramError(std::move(*error));
}

bool eval(const BranchingProgram &bp, const BitString &x) {
  if (x.n != bp.n)
    throw Error(ErrorKind::LengthMismatch,
                "input has " + std::to_string(x.n) + " bits, program expects " + std::to_string(bp.n));
  std::size_t v = 0;
  for (const auto &level : bp.levels) {
    const Node &node = level[v];
    if (const auto *sink = std::get_if<SinkNode>(&node))
      return sink->label;
    const InnerNode &in = std::get<InnerNode>(node);
    v = in.edge(x[in.var]);
  }
  throw Error(ErrorKind::InvalidProgram, "computational path ran past the last level");
}

TransitionMatrix transition_matrix(const BranchingProgram &bp, std::size_t k) {
  if (k < 1 || k > bp.depth())
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(k) + " outside 1.." + std::to_string(bp.depth()));
  const Level &parents = bp.levels[k - 1];
  const Level &children = bp.levels[k];
  TransitionMatrix m;
  m.t.assign(children.size(), std::vector<DyadicRational>(parents.size()));
  const DyadicRational half = DyadicRational::inverse_pow2(1);
  for (std::size_t j = 0; j < parents.size(); ++j) {
    const InnerNode &node = inner(parents[j]);
    m.t.at(node.e0)[j] += half;
    m.t.at(node.e1)[j] += half;
  }
  return m;
}

std::vector<DistributionVector> distributions(const BranchingProgram &bp) {
  ensure_valid(bp, unbounded_width);
  std::vector<DistributionVector> out;
  out.reserve(bp.levels.size());
  out.push_back({DyadicRational::one()});
  for (std::size_t k = 1; k < bp.levels.size(); ++k) {
    const DistributionVector &prev = out.back();
    DistributionVector cur(bp.levels[k].size());
    for (std::size_t j = 0; j < prev.size(); ++j) {
      if (prev[j].is_zero())
        continue;
      const InnerNode &node = inner(bp.levels[k - 1][j]);
      const DyadicRational half = prev[j].halved();
      cur[node.e0] += half;
      cur[node.e1] += half;
    }
    out.push_back(std::move(cur));
  }
  return out;
}

DyadicRational acceptance_probability(const BranchingProgram &bp) {
  const auto dist = distributions(bp);
  DyadicRational total;
  const Level &sinks = bp.levels.back();
  for (std::size_t i = 0; i < sinks.size(); ++i)
    if (std::get<SinkNode>(sinks[i]).label)
      total += dist.back()[i];
  return total;
}

DyadicRational brute_force_acceptance(const BranchingProgram &bp, unsigned max_n) {
  if (bp.n > max_n)
    throw Error(ErrorKind::InputSpaceTooLarge,
                "2^" + std::to_string(bp.n) + " inputs exceed the enumeration cap 2^" + std::to_string(max_n));
  ensure_valid(bp, unbounded_width);
  const std::uint64_t count = std::uint64_t{1} << bp.n;
  std::uint64_t accepted = 0;
  for (std::uint64_t w = 0; w < count; ++w)
    accepted += eval(bp, BitString{w, bp.n});
  return DyadicRational(BigInt(accepted), bp.n);
}

} // namespace robp
