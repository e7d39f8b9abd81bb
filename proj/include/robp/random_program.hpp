/// @file  random_program.hpp
/// @brief Seeded generator of valid width-2/3 read-once programs

#pragma once

#include <cstdint>
#include <optional>

#include "robp/branching_program.hpp"

namespace robp {

enum class VariableOrder {
  /// One random permutation of the variables; level k queries its k-th entry.
  Oblivious,
  /// Each node picks a variable not queried on any path into it.
  PerNode,
};

struct RobpProfile {
  VariableOrder order = VariableOrder::Oblivious;
  /// Number of inner levels; defaults to n. Per-node programs may end sooner,
  /// once some node has every variable read on a path into it.
  std::optional<unsigned> depth;
  /// Probability that an output is steered to acceptance in [epsilon, 1).
  double high_acceptance_fraction = 0.0;
  Rational epsilon = Rational(1, 2);
  unsigned max_retries = 2000;
};

/// Deterministic in (n, width, seed, profile). Throws UnsatisfiableProfile
/// when a steered output cannot be produced within `max_retries` attempts.
BranchingProgram random_robp(unsigned n, std::size_t width, std::uint64_t seed,
                             const RobpProfile &profile = {});

} // namespace robp
