/// @file  branching_program.hpp
/// @brief Leveled read-once branching programs: data model, validation,
///        evaluation and exact acceptance probabilities

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robp/bitstring.hpp"
#include "robp/dyadic.hpp"
#include "robp/error.hpp"

namespace robp {

/// Inner node testing x_var (1-based). Edges hold node indices on the next level.
struct InnerNode {
  unsigned var = 1;
  std::uint32_t e0 = 0;
  std::uint32_t e1 = 0;

  std::uint32_t edge(bool bit) const noexcept { return bit ? e1 : e0; }
  friend bool operator==(const InnerNode &, const InnerNode &) = default;
};

struct SinkNode {
  bool label = false;
  friend bool operator==(const SinkNode &, const SinkNode &) = default;
};

using Node = std::variant<InnerNode, SinkNode>;
using Level = std::vector<Node>;

/// A leveled multi-graph: level 0 holds the source, the last level holds the
/// sinks, and edges only lead from level k to level k+1.
struct BranchingProgram {
  unsigned n = 0;
  std::vector<Level> levels;

  /// Number of levels minus one.
  std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
  std::size_t width() const noexcept;

  friend bool operator==(const BranchingProgram &, const BranchingProgram &) = default;
};

inline bool is_sink(const Node &node) noexcept { return std::holds_alternative<SinkNode>(node); }
inline const InnerNode &inner(const Node &node) { return std::get<InnerNode>(node); }

/// Program whose source is a single sink.
BranchingProgram constant_program(unsigned n, bool value);

/// All nodes of every level query the same variable.
bool is_oblivious(const BranchingProgram &bp);

inline constexpr std::size_t default_width = 3;
inline constexpr std::size_t unbounded_width = std::numeric_limits<std::size_t>::max();

struct ValidationError {
  enum class Kind {
    NotLeveled,
    OutDegreeViolation,
    SinkPlacement,
    ReadOnceViolation,
    WidthExceeded,
    VariableOutOfRange,
  };

  Kind kind;
  std::size_t level = 0;
  std::size_t node = 0;
  unsigned var = 0;
  std::string detail;

  std::string message() const;
};

std::string_view to_string(ValidationError::Kind kind) noexcept;

/// Thrown by operations that require a valid program.
class InvalidProgramError : public Error {
public:
  explicit InvalidProgramError(ValidationError error)
      : Error(ErrorKind::InvalidProgram, error.message()), _error(std::move(error)) {}
  const ValidationError &error() const noexcept { return _error; }

private:
  ValidationError _error;
};

/// Checks every structural invariant. Read-once is decided by propagating,
/// per node, the set of variables queried on at least one source path into it.
std::optional<ValidationError> validate(const BranchingProgram &bp,
                                        std::size_t max_width = default_width);
void ensure_valid(const BranchingProgram &bp, std::size_t max_width = default_width);

/// Follows the computational path of `x`. Throws LengthMismatch.
bool eval(const BranchingProgram &bp, const BitString &x);

/// Entries t[i][j]: half the number of edges from node j of level k-1 to
/// node i of level k. Throws LevelOutOfRange unless 1 <= k <= depth.
struct TransitionMatrix {
  std::vector<std::vector<DyadicRational>> t;

  std::size_t rows() const noexcept { return t.size(); }
  std::size_t cols() const noexcept { return t.empty() ? 0 : t.front().size(); }
  const DyadicRational &operator()(std::size_t i, std::size_t j) const { return t[i][j]; }
};

TransitionMatrix transition_matrix(const BranchingProgram &bp, std::size_t k);

using DistributionVector = std::vector<DyadicRational>;

/// p^(0) = (1), p^(k) = T_k p^(k-1), one vector per level.
std::vector<DistributionVector> distributions(const BranchingProgram &bp);

/// Probability mass of the 1-sinks.
DyadicRational acceptance_probability(const BranchingProgram &bp);

inline constexpr unsigned default_enumeration_cap = 20;

/// |{x : eval(bp, x) = 1}| / 2^n by enumerating every input.
DyadicRational brute_force_acceptance(const BranchingProgram &bp,
                                      unsigned max_n = default_enumeration_cap);

} // namespace robp
