#include "robp/formula.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace robp {

namespace {

std::uint64_t mask_of(const IndexSet &set) {
  std::uint64_t m = 0;
  for (unsigned i : set)
    m |= std::uint64_t{1} << (i - 1);
  return m;
}

/// 1 - 2^-size
DyadicRational miss_probability(std::size_t size) {
  return DyadicRational((BigInt(1) << size) - 1, static_cast<std::uint32_t>(size));
}

} // namespace

void check_formula(const RocFormula &f) {
  if (f.n > max_bits)
    throw Error(ErrorKind::InvalidFormula, "at most 64 variables are supported");
  if (f.c.n != f.n)
    throw Error(ErrorKind::InvalidFormula, "c has " + std::to_string(f.c.n) + " bits, expected " + std::to_string(f.n));
  std::uint64_t seen = 0;
  auto check = [&](const std::vector<IndexSet> &classes, const char *name) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (classes[j].empty())
        throw Error(ErrorKind::InvalidFormula, std::string(name) + "_" + std::to_string(j + 1) + " is empty");
      for (unsigned i : classes[j]) {
        if (i < 1 || i > f.n)
          throw Error(ErrorKind::InvalidFormula, "index " + std::to_string(i) + " outside 1.." + std::to_string(f.n));
        const std::uint64_t bit = std::uint64_t{1} << (i - 1);
        if (seen & bit)
          throw Error(ErrorKind::InvalidFormula, "index " + std::to_string(i) + " occurs in two classes");
        seen |= bit;
      }
    }
  };
  check(f.dnf, "Q");
  check(f.cnf, "R");
}

bool eval_formula(const RocFormula &f, const BitString &x) {
  if (x.n != f.n)
    throw Error(ErrorKind::LengthMismatch,
                "input has " + std::to_string(x.n) + " bits, formula expects " + std::to_string(f.n));
  const std::uint64_t diff = x.word ^ f.c.word;
  bool dnf = f.dnf.empty();
  for (const auto &term : f.dnf)
    dnf = dnf || (diff & mask_of(term)) == 0;
  if (!dnf)
    return false;
  return std::all_of(f.cnf.begin(), f.cnf.end(), [&](const IndexSet &clause) { return (diff & mask_of(clause)) != 0; });
}

DyadicRational acceptance(const RocFormula &f) {
  check_formula(f);
  DyadicRational result = DyadicRational::one();
  if (!f.dnf.empty()) {
    DyadicRational all_terms_fail = DyadicRational::one();
    for (const auto &term : f.dnf)
      all_terms_fail *= miss_probability(term.size());
    result -= all_terms_fail;
  }
  for (const auto &clause : f.cnf)
    result *= miss_probability(clause.size());
  return result;
}

std::optional<std::size_t> CompiledFormula::index_of(std::size_t k, Role role) const {
  const auto &level = roles.at(k);
  const auto it = std::find(level.begin(), level.end(), role);
  if (it == level.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

namespace {

struct Step {
  unsigned var;
  bool in_dnf;
  bool block_start;
  bool dnf_boundary; ///< last variable of the DNF part
};

/// Successor roles of one node: where the edge labelled c_i leads, and where
/// the other edge leads. Equal entries form a double edge.
struct Targets {
  Role match;
  Role miss;
};

Targets transition(const Step &step, Role from) {
  using R = Role;
  if (step.in_dnf && step.dnf_boundary && step.block_start) {
    // Single-variable last term: levels k_q + 1 and k_{q+1} coincide.
    if (from == R::V1)
      return {R::V1, R::V3};
    return {R::V1, R::V1};
  }
  if (step.in_dnf && step.dnf_boundary) {
    switch (from) {
    case R::V1: return {R::V3, R::V3};
    case R::V2: return {R::V1, R::V3};
    case R::V3: return {R::V1, R::V1};
    }
  }
  if (step.block_start) {
    switch (from) {
    case R::V1: return {R::V2, R::V1};
    case R::V2: return {R::V3, R::V3};
    case R::V3: return {R::V3, R::V3};
    }
  }
  switch (from) {
  case R::V1: return {R::V1, R::V1};
  case R::V2: return {R::V2, R::V1};
  case R::V3: return {R::V3, R::V3};
  }
  return {from, from};
}

} // namespace

CompiledFormula compile_with_roles(const RocFormula &f) {
  check_formula(f);
  if (f.dnf.empty() && f.cnf.empty())
    throw Error(ErrorKind::EmptyFormula, "q = r = 0 leaves no level to build");

  std::vector<Step> steps;
  auto add_class = [&](IndexSet cls, bool in_dnf, bool last_dnf) {
    std::sort(cls.begin(), cls.end());
    for (std::size_t pos = 0; pos < cls.size(); ++pos)
      steps.push_back({cls[pos], in_dnf, pos == 0, last_dnf && pos + 1 == cls.size()});
  };
  for (std::size_t j = 0; j < f.dnf.size(); ++j)
    add_class(f.dnf[j], true, j + 1 == f.dnf.size());
  for (const auto &clause : f.cnf)
    add_class(clause, false, false);

  CompiledFormula out;
  out.program.n = f.n;
  std::vector<Role> current{Role::V1};
  for (const Step &step : steps) {
    std::array<bool, 4> present{};
    std::vector<Targets> targets;
    for (Role r : current) {
      targets.push_back(transition(step, r));
      present[static_cast<int>(targets.back().match)] = true;
      present[static_cast<int>(targets.back().miss)] = true;
    }
    std::vector<Role> next;
    std::array<std::uint32_t, 4> index{};
    for (int r = 1; r <= 3; ++r)
      if (present[r]) {
        index[r] = static_cast<std::uint32_t>(next.size());
        next.push_back(static_cast<Role>(r));
      }
    const bool c_bit = f.c[step.var];
    Level level;
    for (const Targets &t : targets) {
      const std::uint32_t match = index[static_cast<int>(t.match)];
      const std::uint32_t miss = index[static_cast<int>(t.miss)];
      level.push_back(InnerNode{step.var, c_bit ? miss : match, c_bit ? match : miss});
    }
    out.program.levels.push_back(std::move(level));
    out.roles.push_back(std::move(current));
    current = std::move(next);
  }
  Level sinks;
  for (Role r : current)
    sinks.push_back(SinkNode{r == Role::V1});
  out.program.levels.push_back(std::move(sinks));
  out.roles.push_back(std::move(current));
  return out;
}

RocFormula random_formula(unsigned n, const Rational &epsilon, std::uint64_t seed, unsigned max_retries) {
  if (epsilon <= 0 || epsilon >= 1)
    throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
  if (n < 1 || n > max_bits)
    throw Error(ErrorKind::InvalidArgument, "n must lie in 1..64");

  std::mt19937_64 rng(seed);
  auto uniform = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };

  for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<unsigned> pool(n);
    std::iota(pool.begin(), pool.end(), 1u);
    std::shuffle(pool.begin(), pool.end(), rng);
    auto take = [&]() {
      const unsigned i = pool.back();
      pool.pop_back();
      return i;
    };

    RocFormula f;
    f.n = n;
    unsigned q = 0, r = 0;
    while (q + r == 0) {
      q = uniform(0, 3);
      r = uniform(0, 3);
    }
    for (unsigned j = 0; j < q && !pool.empty(); ++j) {
      IndexSet term;
      for (unsigned s = uniform(1, 3); s > 0 && !pool.empty(); --s)
        term.push_back(take());
      f.dnf.push_back(std::move(term));
    }
    for (unsigned j = 0; j < r && !pool.empty(); ++j) {
      IndexSet clause;
      for (unsigned s = uniform(1, 6); s > 0 && !pool.empty(); --s)
        clause.push_back(take());
      f.cnf.push_back(std::move(clause));
    }
    f.c = BitString{rng() & low_mask(n), n};

    // Repair: widen clauses, shorten terms or add singleton terms until the
    // target is met or no move helps.
    DyadicRational current = acceptance(f);
    while (!(current >= epsilon)) {
      std::optional<RocFormula> best;
      DyadicRational best_value = current;
      auto consider = [&](RocFormula candidate) {
        const DyadicRational value = acceptance(candidate);
        if (value > best_value) {
          best_value = value;
          best = std::move(candidate);
        }
      };
      if (!pool.empty() && !f.cnf.empty()) {
        RocFormula g = f;
        auto smallest = std::min_element(g.cnf.begin(), g.cnf.end(),
                                         [](const IndexSet &a, const IndexSet &b) { return a.size() < b.size(); });
        smallest->push_back(pool.back());
        consider(std::move(g));
      }
      if (!f.dnf.empty()) {
        RocFormula g = f;
        auto largest = std::max_element(g.dnf.begin(), g.dnf.end(),
                                        [](const IndexSet &a, const IndexSet &b) { return a.size() < b.size(); });
        if (largest->size() > 1) {
          largest->pop_back();
          consider(std::move(g));
        }
        if (!pool.empty()) {
          RocFormula h = f;
          h.dnf.push_back({pool.back()});
          consider(std::move(h));
        }
      }
      if (!best)
        break;
      // Keep the index pool in sync with what the chosen move did.
      const auto used = [](const RocFormula &g) {
        std::uint64_t m = 0;
        for (const auto &cls : g.dnf)
          m |= mask_of(cls);
        for (const auto &cls : g.cnf)
          m |= mask_of(cls);
        return m;
      };
      const std::uint64_t before = used(f), after = used(*best);
      if (after & ~before)
        pool.pop_back();
      for (unsigned i = 1; i <= n; ++i)
        if (((before & ~after) >> (i - 1)) & 1u)
          pool.insert(pool.begin(), i);
      f = std::move(*best);
      current = best_value;
    }
    if (!(current >= epsilon))
      continue;
    for (auto &cls : f.dnf)
      std::sort(cls.begin(), cls.end());
    for (auto &cls : f.cnf)
      std::sort(cls.begin(), cls.end());
    return f;
  }
  throw Error(ErrorKind::UnsatisfiableTarget,
              "no formula over " + std::to_string(n) + " variables reached acceptance " + to_string(epsilon));
}

} // namespace robp
