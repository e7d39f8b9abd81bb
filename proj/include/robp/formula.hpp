/// @file  formula.hpp
/// @brief Read-once conjunctions of a DNF and a CNF, and their compilation
///        into oblivious width-3 read-once branching programs

#pragma once

#include <cstdint>
#include <vector>

#include "robp/branching_program.hpp"

namespace robp {

using IndexSet = std::vector<unsigned>;

/// Accepts x iff (no DNF terms, or some term Q_j has x_i = c_i on all of Q_j)
/// and every clause R_j has some x_i != c_i. Bits of `c` outside the classes
/// are carried along but never read.
struct RocFormula {
  unsigned n = 0;
  std::vector<IndexSet> dnf; ///< Q_1..Q_q
  std::vector<IndexSet> cnf; ///< R_1..R_r
  BitString c;

  friend bool operator==(const RocFormula &, const RocFormula &) = default;
};

/// Throws InvalidFormula unless the classes are non-empty, pairwise disjoint
/// and inside 1..n, and |c| = n.
void check_formula(const RocFormula &f);

bool eval_formula(const RocFormula &f, const BitString &x);

/// (1 - prod_j (1 - 2^-|Q_j|)) * prod_j (1 - 2^-|R_j|); a missing DNF or CNF
/// contributes the factor 1.
DyadicRational acceptance(const RocFormula &f);

/// Role of a node inside the width-3 construction. Level lists hold the
/// present roles in ascending order, so v3 sits at index 1 on levels that only
/// carry v1 and v3.
enum class Role : std::uint8_t { V1 = 1, V2 = 2, V3 = 3 };

struct CompiledFormula {
  BranchingProgram program;
  std::vector<std::vector<Role>> roles;

  /// Index of `role` on level k, or nullopt when the level lacks it.
  std::optional<std::size_t> index_of(std::size_t k, Role role) const;
};

/// Oblivious width-3 program of depth |I| computing eval_formula. Variables
/// are queried class by class (Q_1..Q_q, R_1..R_r), ascending inside a class.
/// Throws EmptyFormula when q = r = 0.
CompiledFormula compile_with_roles(const RocFormula &f);
inline BranchingProgram compile(const RocFormula &f) { return compile_with_roles(f).program; }

/// Seeded formula with acceptance >= epsilon. Throws UnsatisfiableTarget.
RocFormula random_formula(unsigned n, const Rational &epsilon, std::uint64_t seed,
                          unsigned max_retries = 1000);

} // namespace robp
