// Reference implementations used only by the tests. Each one recomputes a
// quantity the slow, obvious way so the library's fast path has something
// independent to agree with.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "robp/branching_program.hpp"
#include "robp/dyadic.hpp"
#include "robp/formula.hpp"
#include "robp/richness.hpp"
#include "robp/sample_space.hpp"

namespace oracle {

using robp::BigInt;
using robp::Rational;

/// counts[k][v]: number of inputs whose path passes through node v of level k.
inline std::vector<std::vector<std::uint64_t>> path_counts(const robp::BranchingProgram &bp) {
  std::vector<std::vector<std::uint64_t>> counts;
  for (const auto &level : bp.levels)
    counts.emplace_back(level.size(), 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bp.n); ++x) {
    std::size_t v = 0;
    for (std::size_t k = 0; k < bp.levels.size(); ++k) {
      ++counts[k][v];
      const auto &node = bp.levels[k][v];
      if (robp::is_sink(node))
        break;
      const auto &in = robp::inner(node);
      v = (x >> (in.var - 1)) & 1u ? in.e1 : in.e0;
    }
  }
  return counts;
}

inline Rational as_rational(const robp::DyadicRational &d) {
  return Rational(d.numerator(), BigInt(1) << d.exponent());
}

/// Enumerates every source-to-sink path (all 2^depth edge choices) and checks
/// that no variable repeats along any of them.
inline bool read_once_by_paths(const robp::BranchingProgram &bp) {
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> walk = [&](std::size_t k, std::size_t v,
                                                                          std::uint64_t seen) {
    const auto &node = bp.levels[k][v];
    if (robp::is_sink(node))
      return true;
    const auto &in = robp::inner(node);
    const std::uint64_t bit = std::uint64_t{1} << (in.var - 1);
    if (seen & bit)
      return false;
    return walk(k + 1, in.e0, seen | bit) && walk(k + 1, in.e1, seen | bit);
  };
  return walk(0, 0, 0);
}

inline bool formula_accepts(const robp::RocFormula &f, std::uint64_t x) {
  const auto agrees = [&](unsigned i) { return ((x ^ f.c.word) >> (i - 1) & 1u) == 0; };
  bool dnf = f.dnf.empty();
  for (const auto &term : f.dnf) {
    bool all = true;
    for (unsigned i : term)
      all = all && agrees(i);
    dnf = dnf || all;
  }
  bool cnf = true;
  for (const auto &clause : f.cnf) {
    bool any = false;
    for (unsigned i : clause)
      any = any || !agrees(i);
    cnf = cnf && any;
  }
  return dnf && cnf;
}

/// Accepted inputs of a formula, counted over the whole cube.
inline std::uint64_t formula_count(const robp::RocFormula &f) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n); ++x)
    count += formula_accepts(f, x);
  return count;
}

/// Irreducibility by trial division with every polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(std::uint64_t f) {
  const int deg = 63 - std::countl_zero(f);
  if (deg < 1)
    return false;
  const auto remainder = [](std::uint64_t a, std::uint64_t d) {
    const int dd = 63 - std::countl_zero(d);
    for (int s = 63 - std::countl_zero(a); a != 0 && s >= dd; s = 63 - std::countl_zero(a))
      a ^= d << (s - dd);
    return a;
  };
  for (int d = 1; d <= deg / 2; ++d)
    for (std::uint64_t g = std::uint64_t{1} << d; g < (std::uint64_t{2} << d); ++g)
      if (remainder(f, g) == 0)
        return false;
  return true;
}

/// Every sample of the set, with repeats, as a flat list.
inline std::vector<std::uint64_t> samples(const robp::BitStringSet &set) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    out.insert(out.end(), set.weights()[i], set.members()[i]);
  return out;
}

/// max over nonzero masks of |#even - #odd| / N by straight enumeration.
inline Rational bias(const std::vector<std::uint64_t> &xs, unsigned n) {
  std::int64_t best = 0;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
    std::int64_t sum = 0;
    for (std::uint64_t x : xs)
      sum += (std::popcount(a & x) % 2 == 0) ? 1 : -1;
    best = std::max(best, sum < 0 ? -sum : sum);
  }
  return Rational(best, static_cast<std::int64_t>(xs.size()));
}

/// max over position sets |S| <= k and patterns of |Pr[x_S = pattern] - 2^-|S||.
inline Rational kwise(const std::vector<std::uint64_t> &xs, unsigned n, unsigned k) {
  Rational best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const unsigned size = static_cast<unsigned>(std::popcount(s));
    if (size > k)
      continue;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
      if (pattern & ~s)
        continue;
      std::int64_t hits = 0;
      for (std::uint64_t x : xs)
        hits += (x & s) == pattern;
      Rational dev = Rational(hits, static_cast<std::int64_t>(xs.size())) - Rational(1, std::int64_t{1} << size);
      if (dev < 0)
        dev = -dev;
      best = std::max(best, dev);
    }
  }
  return best;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// A counterexample is genuine when no member meets the condition and the
/// instance clears its threshold.
inline bool refutes(const robp::BitStringSet &set, const robp::RichnessInstance &inst) {
  Rational rprob = 1;
  for (const auto &clause : inst.r)
    rprob *= Rational(1) - Rational(1, std::int64_t{1} << clause.size());
  if (rprob < inst.epsilon)
    return false;
  for (std::uint64_t a : set.members()) {
    bool ok = true;
    for (unsigned i : inst.q)
      ok = ok && ((a ^ inst.c.word) >> (i - 1) & 1u) == 0;
    for (const auto &clause : inst.r) {
      bool differs = false;
      for (unsigned i : clause)
        differs = differs || ((a ^ inst.c.word) >> (i - 1) & 1u);
      ok = ok && differs;
    }
    if (ok)
      return false;
  }
  return true;
}

inline bool refutes(const robp::BitStringSet &set, const robp::WeakRichnessInstance &inst) {
  if (Rational(BigInt(formula_count(inst.formula)), BigInt(1) << inst.formula.n) < inst.epsilon)
    return false;
  for (std::uint64_t a : set.members())
    if (formula_accepts(inst.formula, a))
      return false;
  return true;
}

} // namespace oracle
