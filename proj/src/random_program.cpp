#include "robp/random_program.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace robp {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

unsigned pick_unused(Rng &rng, std::uint64_t used, unsigned n) {
  const std::uint64_t free = low_mask(n) & ~used;
  auto index = uniform(rng, 0, static_cast<std::size_t>(std::popcount(free)) - 1);
  for (unsigned var = 1; var <= n; ++var)
    if ((free >> (var - 1)) & 1u) {
      if (index == 0)
        return var;
      --index;
    }
  return 0;
}

/// Target for one edge. With a reject lane (last index), non-lane nodes feed
/// it with probability `leak` and the lane keeps its own mass half the time.
std::uint32_t pick_target(Rng &rng, std::size_t size, std::optional<double> leak, bool from_lane) {
  if (!leak || size < 2)
    return static_cast<std::uint32_t>(uniform(rng, 0, size - 1));
  const std::size_t lane = size - 1;
  if (coin(rng, from_lane ? 0.5 : *leak))
    return static_cast<std::uint32_t>(lane);
  return static_cast<std::uint32_t>(uniform(rng, 0, lane - 1));
}

/// Per-node programs stop early at the first level holding a node that every
/// variable already reaches.
BranchingProgram build_structure(Rng &rng, unsigned n, unsigned depth, std::size_t width, VariableOrder order,
                                 std::optional<double> leak) {
  BranchingProgram bp{n, {}};
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<std::uint64_t> incoming{0};
  std::size_t size = 1;
  for (unsigned k = 0; k < depth; ++k) {
    const auto exhausted = [&](std::uint64_t used) { return (low_mask(n) & ~used) == 0; };
    if (order == VariableOrder::PerNode && std::any_of(incoming.begin(), incoming.end(), exhausted))
      break;
    const std::size_t next_size = uniform(rng, 1, std::min(width, 2 * size));
    Level level;
    std::vector<std::uint64_t> next(next_size, 0);
    const bool has_lane = k > 0 && size >= 2;
    for (std::size_t v = 0; v < size; ++v) {
      const unsigned var = order == VariableOrder::Oblivious ? perm[k] : pick_unused(rng, incoming[v], n);
      const bool from_lane = has_lane && v + 1 == size;
      InnerNode node{var, pick_target(rng, next_size, leak, from_lane), pick_target(rng, next_size, leak, from_lane)};
      const std::uint64_t seen = incoming[v] | (std::uint64_t{1} << (var - 1));
      next[node.e0] |= seen;
      next[node.e1] |= seen;
      level.push_back(node);
    }
    bp.levels.push_back(std::move(level));
    incoming = std::move(next);
    size = next_size;
  }
  bp.levels.emplace_back(size, SinkNode{false});
  return bp;
}

void label_sinks(BranchingProgram &bp, std::uint32_t mask) {
  Level &sinks = bp.levels.back();
  for (std::size_t i = 0; i < sinks.size(); ++i)
    sinks[i] = SinkNode{static_cast<bool>((mask >> i) & 1u)};
}

} // namespace

BranchingProgram random_robp(unsigned n, std::size_t width, std::uint64_t seed, const RobpProfile &profile) {
  if (width != 2 && width != 3)
    throw Error(ErrorKind::InvalidArgument, "width must be 2 or 3");
  if (n < 1 || n > max_bits)
    throw Error(ErrorKind::InvalidArgument, "n must lie in 1..64");
  const unsigned depth = profile.depth.value_or(n);
  if (depth > n)
    throw Error(ErrorKind::InvalidArgument, "depth cannot exceed n for a read-once program");

  Rng rng(seed);
  const bool steer = coin(rng, std::clamp(profile.high_acceptance_fraction, 0.0, 1.0));
  if (!steer) {
    BranchingProgram bp = build_structure(rng, n, depth, width, profile.order, std::nullopt);
    const auto sinks = bp.levels.back().size();
    label_sinks(bp, static_cast<std::uint32_t>(uniform(rng, 0, (std::size_t{1} << sinks) - 1)));
    return bp;
  }

  const double slack = std::max(0.0, 1.0 - to_double(profile.epsilon));
  for (unsigned attempt = 0; attempt < profile.max_retries; ++attempt) {
    std::optional<double> leak;
    if (coin(rng, 0.5))
      leak = slack * std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    BranchingProgram bp = build_structure(rng, n, depth, width, profile.order, leak);
    const std::size_t sinks = bp.levels.back().size();
    const std::uint32_t all = (std::uint32_t{1} << sinks) - 1;
    const auto dist = distributions(bp);
    std::vector<std::uint32_t> good;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      if (sinks > 1 && (mask == 0 || mask == all))
        continue;
      DyadicRational accept;
      for (std::size_t i = 0; i < sinks; ++i)
        if ((mask >> i) & 1u)
          accept += dist.back()[i];
      if (accept >= profile.epsilon && accept != DyadicRational::one())
        good.push_back(mask);
    }
    if (good.empty())
      continue;
    label_sinks(bp, good[uniform(rng, 0, good.size() - 1)]);
    return bp;
  }
  throw Error(ErrorKind::UnsatisfiableProfile,
              "no program reached acceptance " + to_string(profile.epsilon) + " within " +
                  std::to_string(profile.max_retries) + " attempts");
}

} // namespace robp
