/// @file  richness.hpp
/// @brief Bounded exhaustive checks of the richness and weak richness
///        conditions, with re-checkable counterexamples

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "robp/formula.hpp"
#include "robp/sample_space.hpp"

namespace robp {

/// One (Q, {R_j}, c, epsilon) tuple. Q and the R_j are disjoint and every R_j
/// is non-empty.
struct RichnessInstance {
  unsigned n = 0;
  IndexSet q;
  std::vector<IndexSet> r;
  BitString c;
  Rational epsilon;
};

/// a_i = c_i on Q, and every R_j has some a_i != c_i.
bool satisfies_cond(const BitString &a, const RichnessInstance &inst);

/// prod_j (1 - 2^-|R_j|); 1 when r = 0.
DyadicRational instance_probability(const RichnessInstance &inst);
/// 2^-|Q|, the probability that a uniform string agrees with c on Q.
DyadicRational query_probability(const RichnessInstance &inst);

/// The weak variant quantifies over DNF/CNF pairs; an instance is a
/// formula together with the threshold it cleared.
struct WeakRichnessInstance {
  RocFormula formula;
  Rational epsilon;
};

struct RichnessBudget {
  /// Largest number of CNF clauses R_j.
  unsigned max_r = 3;
  /// Largest |Q| in the full check; floor(log2 n) when unset.
  std::optional<unsigned> max_q_size;
  /// Largest number of DNF terms Q_j in the weak check.
  unsigned max_q_terms = 3;
  /// Cap on (instance, c) pairs examined before the search stops.
  std::uint64_t max_checks = std::uint64_t{1} << 34;
};

struct Verdict {
  bool pass = true;
  std::optional<RichnessInstance> counterexample;
  std::optional<WeakRichnessInstance> weak_counterexample;
  std::uint64_t instances_checked = 0; ///< (Q, {R_j}, c) tuples with the threshold met
  std::uint64_t witnesses_checked = 0; ///< member evaluations
  bool search_exhaustive = true;       ///< false when the budget cut the search short
};

/// For every I, partition {R_j} of I with at most max_r classes and
/// prod (1 - 2^-|R_j|) >= epsilon, every Q outside I with |Q| <= max_q_size,
/// and every c (varied on Q and I only), looks for a member meeting the
/// condition. The first failing tuple in enumeration order is returned.
Verdict check_rich(const BitStringSet &set, const Rational &epsilon, const RichnessBudget &budget = {});

/// Same search over read-once DNF/CNF pairs whose acceptance is >= epsilon.
Verdict check_weak_rich(const BitStringSet &set, const Rational &epsilon, const RichnessBudget &budget = {});

} // namespace robp
