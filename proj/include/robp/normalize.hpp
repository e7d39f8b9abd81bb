/// @file  normalize.hpp
/// @brief Function-preserving rewrites that bring a program into sorted form

#pragma once

#include <cstddef>
#include <vector>

#include "robp/branching_program.hpp"

namespace robp {

struct NormalizeOptions {
  /// Split nodes until each level holds `width` positive-probability nodes,
  /// where the level has a node with at least two incoming edges.
  bool pad_width = false;
  std::size_t width = default_width;
};

/// Where an output node came from in the input program. Merged nodes report
/// the lowest-index member; split copies report the node they were split from.
struct NodeOrigin {
  std::size_t level = 0;
  std::size_t node = 0;
  friend bool operator==(const NodeOrigin &, const NodeOrigin &) = default;
};

struct NormalizedProgram {
  BranchingProgram program;
  std::vector<std::vector<NodeOrigin>> origin;
};

/// Applies, until nothing changes: removal of zero-probability nodes,
/// collapse of identity (permutation, all double edges) transitions, and
/// merging of duplicate nodes. Then optionally pads, and finally orders every
/// level by descending probability (stable in the current index).
NormalizedProgram normalize_traced(const BranchingProgram &bp, const NormalizeOptions &options = {});

inline BranchingProgram normalize(const BranchingProgram &bp, const NormalizeOptions &options = {}) {
  return normalize_traced(bp, options).program;
}

/// True iff every level k >= 1 lists strictly positive probabilities in
/// non-increasing order.
bool is_level_sorted(const BranchingProgram &bp);

} // namespace robp
