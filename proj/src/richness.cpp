#include "robp/richness.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "robp/error.hpp"

namespace robp {

namespace {

std::uint64_t mask_of(const IndexSet &set) {
  std::uint64_t m = 0;
  for (unsigned i : set)
    m |= std::uint64_t{1} << (i - 1);
  return m;
}

IndexSet indices_of(std::uint64_t mask) {
  IndexSet out;
  for (; mask != 0; mask &= mask - 1)
    out.push_back(static_cast<unsigned>(std::countr_zero(mask)) + 1);
  return out;
}

DyadicRational miss_probability(std::size_t size) {
  return DyadicRational((BigInt(1) << size) - 1, static_cast<std::uint32_t>(size));
}

/// Subsets of `pool` with exactly s elements, in increasing order.
template <class F> void for_each_subset_of_size(std::uint64_t pool, unsigned s, F &&f) {
  const unsigned size = static_cast<unsigned>(std::popcount(pool));
  if (s > size)
    return;
  if (s == 0) {
    f(std::uint64_t{0});
    return;
  }
  for_each_combination(size, s, [&](std::uint64_t v) { f(deposit_bits(v, pool)); });
}

/// Set partitions of the elements of `pool` into at most `max_blocks`
/// blocks, blocks ordered by their smallest element. `kinds` > 1 also labels
/// each block with a kind in [0, kinds) subject to per-kind block caps.
struct Partitioner {
  std::vector<unsigned> caps; ///< block cap per kind
  std::vector<std::uint64_t> blocks;
  std::vector<unsigned> kind_of;
  std::vector<unsigned> used;

  void run(std::uint64_t pool, const std::function<void()> &leaf) {
    blocks.clear();
    kind_of.clear();
    used.assign(caps.size(), 0);
    recurse(pool, leaf);
  }

  void recurse(std::uint64_t rest, const std::function<void()> &leaf) {
    if (rest == 0) {
      leaf();
      return;
    }
    const std::uint64_t bit = rest & -rest;
    rest ^= bit;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      recurse(rest, leaf);
      blocks[b] ^= bit;
    }
    for (unsigned kind = 0; kind < caps.size(); ++kind) {
      if (used[kind] >= caps[kind])
        continue;
      blocks.push_back(bit);
      kind_of.push_back(kind);
      ++used[kind];
      recurse(rest, leaf);
      --used[kind];
      kind_of.pop_back();
      blocks.pop_back();
    }
  }
};

/// Distinct projections of the members onto the positions of `u`, packed.
std::vector<std::uint64_t> project(const BitStringSet &set, std::uint64_t u) {
  const unsigned width = static_cast<unsigned>(std::popcount(u));
  std::vector<bool> seen(std::size_t{1} << width, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : set.members()) {
    const std::uint64_t p = extract_bits(a, u);
    if (!seen[p]) {
      seen[p] = true;
      out.push_back(p);
    }
  }
  return out;
}

struct Search {
  Verdict verdict;
  std::uint64_t max_checks;

  /// Scans every c over the packed positions; returns the first c with no
  /// member meeting `cond`, or nullopt. Sets search_exhaustive on budget stop.
  template <class Cond>
  std::optional<std::uint64_t> scan(const std::vector<std::uint64_t> &proj, unsigned width, Cond &&cond) {
    const std::uint64_t patterns = std::uint64_t{1} << width;
    for (std::uint64_t c = 0; c < patterns; ++c) {
      if (verdict.instances_checked >= max_checks) {
        verdict.search_exhaustive = false;
        return std::nullopt;
      }
      ++verdict.instances_checked;
      bool found = false;
      for (std::uint64_t p : proj) {
        ++verdict.witnesses_checked;
        if (cond(p ^ c)) {
          found = true;
          break;
        }
      }
      if (!found)
        return c;
    }
    return std::nullopt;
  }

  bool stopped() const { return !verdict.pass || !verdict.search_exhaustive; }
};

void check_set(const BitStringSet &set) {
  if (set.n() > 30)
    throw Error(ErrorKind::BudgetExceeded, "richness search supports n <= 30");
}

} // namespace

bool satisfies_cond(const BitString &a, const RichnessInstance &inst) {
  if (a.n != inst.n || inst.c.n != inst.n)
    throw Error(ErrorKind::LengthMismatch, "string and instance lengths differ");
  const std::uint64_t diff = a.word ^ inst.c.word;
  if (diff & mask_of(inst.q))
    return false;
  return std::all_of(inst.r.begin(), inst.r.end(), [&](const IndexSet &cls) { return (diff & mask_of(cls)) != 0; });
}

DyadicRational instance_probability(const RichnessInstance &inst) {
  DyadicRational p = DyadicRational::one();
  for (const auto &cls : inst.r)
    p *= miss_probability(cls.size());
  return p;
}

DyadicRational query_probability(const RichnessInstance &inst) {
  return DyadicRational::inverse_pow2(static_cast<std::uint32_t>(inst.q.size()));
}

Verdict check_rich(const BitStringSet &set, const Rational &epsilon, const RichnessBudget &budget) {
  check_set(set);
  const unsigned n = set.n();
  const unsigned q_cap = budget.max_q_size.value_or(n >= 1 ? static_cast<unsigned>(std::bit_width(n)) - 1 : 0);
  const std::uint64_t all = low_mask(n);

  Search search{{}, budget.max_checks};
  Partitioner partitioner{{budget.max_r}, {}, {}, {}};

  for (unsigned qs = 0; qs <= q_cap && !search.stopped(); ++qs)
    for_each_subset_of_size(all, qs, [&](std::uint64_t q) {
      if (search.stopped())
        return;
      const std::uint64_t rest = all & ~q;
      // I ranges over subsets of the complement of Q, in increasing order.
      for (std::uint64_t sub = 0;; sub = (sub - rest) & rest) {
        const std::uint64_t i_mask = sub;
        const std::uint64_t u = q | i_mask;
        const unsigned width = static_cast<unsigned>(std::popcount(u));
        std::vector<std::uint64_t> proj;
        bool projected = false;
        partitioner.run(i_mask, [&]() {
          if (search.stopped())
            return;
          DyadicRational prob = DyadicRational::one();
          for (std::uint64_t block : partitioner.blocks)
            prob *= miss_probability(static_cast<std::size_t>(std::popcount(block)));
          if (!(prob >= epsilon))
            return;
          if (!projected) {
            proj = project(set, u);
            projected = true;
          }
          const std::uint64_t q_packed = extract_bits(q, u);
          std::vector<std::uint64_t> r_packed;
          for (std::uint64_t block : partitioner.blocks)
            r_packed.push_back(extract_bits(block, u));
          const auto missing = search.scan(proj, width, [&](std::uint64_t diff) {
            if (diff & q_packed)
              return false;
            for (std::uint64_t r : r_packed)
              if ((diff & r) == 0)
                return false;
            return true;
          });
          if (missing) {
            RichnessInstance inst{n, indices_of(q), {}, BitString{deposit_bits(*missing, u), n}, epsilon};
            for (std::uint64_t block : partitioner.blocks)
              inst.r.push_back(indices_of(block));
            search.verdict.pass = false;
            search.verdict.counterexample = std::move(inst);
          }
        });
        if (search.stopped() || sub == rest)
          break;
      }
    });
  return search.verdict;
}

Verdict check_weak_rich(const BitStringSet &set, const Rational &epsilon, const RichnessBudget &budget) {
  check_set(set);
  const unsigned n = set.n();
  const std::uint64_t all = low_mask(n);

  Search search{{}, budget.max_checks};
  // kind 0: DNF term, kind 1: CNF clause
  Partitioner partitioner{{budget.max_q_terms, budget.max_r}, {}, {}, {}};

  for (std::uint64_t sub = 0;; sub = (sub - all) & all) {
    const std::uint64_t u = sub;
    const unsigned width = static_cast<unsigned>(std::popcount(u));
    std::vector<std::uint64_t> proj;
    bool projected = false;
    partitioner.run(u, [&]() {
      if (search.stopped())
        return;
      RocFormula f{n, {}, {}, BitString{0, n}};
      std::vector<std::uint64_t> terms, clauses;
      for (std::size_t b = 0; b < partitioner.blocks.size(); ++b) {
        const std::uint64_t block = partitioner.blocks[b];
        (partitioner.kind_of[b] == 0 ? terms : clauses).push_back(extract_bits(block, u));
        (partitioner.kind_of[b] == 0 ? f.dnf : f.cnf).push_back(indices_of(block));
      }
      if (!(acceptance(f) >= epsilon))
        return;
      if (!projected) {
        proj = project(set, u);
        projected = true;
      }
      const auto missing = search.scan(proj, width, [&](std::uint64_t diff) {
        bool dnf = terms.empty();
        for (std::uint64_t t : terms)
          dnf = dnf || (diff & t) == 0;
        if (!dnf)
          return false;
        for (std::uint64_t r : clauses)
          if ((diff & r) == 0)
            return false;
        return true;
      });
      if (missing) {
        f.c = BitString{deposit_bits(*missing, u), n};
        search.verdict.pass = false;
        search.verdict.weak_counterexample = WeakRichnessInstance{std::move(f), epsilon};
      }
    });
    if (search.stopped() || sub == all)
      break;
  }
  return search.verdict;
}

} // namespace robp
