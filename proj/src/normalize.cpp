#include "robp/normalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace robp {

namespace {

struct Work {
  BranchingProgram bp;
  std::vector<std::vector<NodeOrigin>> origin;
};

void remap_edges(Level &level, const std::vector<std::uint32_t> &map) {
  for (auto &node : level)
    if (auto *in = std::get_if<InnerNode>(&node)) {
      in->e0 = map[in->e0];
      in->e1 = map[in->e1];
    }
}

/// Keeps the nodes of level k flagged in `keep`, in order; `target[v]` says
/// which surviving node v's predecessors should point at afterwards.
void rebuild_level(Work &w, std::size_t k, const std::vector<std::uint32_t> &target,
                   const std::vector<bool> &keep) {
  std::vector<std::uint32_t> position(keep.size(), 0);
  Level nodes;
  std::vector<NodeOrigin> origin;
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (!keep[v])
      continue;
    position[v] = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back(w.bp.levels[k][v]);
    origin.push_back(w.origin[k][v]);
  }
  std::vector<std::uint32_t> map(keep.size());
  for (std::size_t v = 0; v < keep.size(); ++v)
    map[v] = position[target[v]];
  w.bp.levels[k] = std::move(nodes);
  w.origin[k] = std::move(origin);
  if (k > 0)
    remap_edges(w.bp.levels[k - 1], map);
}

bool prune_unreachable(Work &w) {
  bool changed = false;
  std::vector<bool> reached{true};
  for (std::size_t k = 0; k < w.bp.levels.size(); ++k) {
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
      std::vector<std::uint32_t> target(reached.size());
      std::iota(target.begin(), target.end(), 0u);
      rebuild_level(w, k, target, reached);
      changed = true;
    }
    if (k + 1 == w.bp.levels.size())
      break;
    std::vector<bool> next(w.bp.levels[k + 1].size(), false);
    for (const auto &node : w.bp.levels[k]) {
      next[inner(node).e0] = true;
      next[inner(node).e1] = true;
    }
    reached = std::move(next);
  }
  return changed;
}

/// Level k-1 -> k is an identity transition when every node of level k-1
/// double-edges into a distinct node of level k and nothing else enters it.
bool collapse_one_identity(Work &w) {
  for (std::size_t k = 1; k < w.bp.levels.size(); ++k) {
    const Level &from = w.bp.levels[k - 1];
    const Level &to = w.bp.levels[k];
    if (from.size() != to.size())
      continue;
    std::vector<std::uint32_t> perm(from.size());
    std::vector<bool> hit(to.size(), false);
    bool identity = true;
    for (std::size_t j = 0; j < from.size() && identity; ++j) {
      const InnerNode &node = inner(from[j]);
      if (node.e0 != node.e1 || hit[node.e0]) {
        identity = false;
        break;
      }
      hit[node.e0] = true;
      perm[j] = node.e0;
    }
    if (!identity)
      continue;
    if (k >= 2)
      remap_edges(w.bp.levels[k - 2], perm);
    w.bp.levels.erase(w.bp.levels.begin() + static_cast<std::ptrdiff_t>(k - 1));
    w.origin.erase(w.origin.begin() + static_cast<std::ptrdiff_t>(k - 1));
    return true;
  }
  return false;
}

bool merge_duplicates(Work &w) {
  bool changed = false;
  for (std::size_t k = w.bp.levels.size(); k-- > 0;) {
    const Level &level = w.bp.levels[k];
    std::map<std::tuple<int, unsigned, std::uint32_t, std::uint32_t>, std::uint32_t> first;
    std::vector<std::uint32_t> target(level.size());
    std::vector<bool> keep(level.size(), true);
    bool merged = false;
    for (std::size_t v = 0; v < level.size(); ++v) {
      const auto key = is_sink(level[v])
                           ? std::tuple<int, unsigned, std::uint32_t, std::uint32_t>{0, std::get<SinkNode>(level[v]).label, 0, 0}
                           : std::tuple<int, unsigned, std::uint32_t, std::uint32_t>{1, inner(level[v]).var, inner(level[v]).e0, inner(level[v]).e1};
      auto [it, inserted] = first.emplace(key, static_cast<std::uint32_t>(v));
      target[v] = it->second;
      if (!inserted) {
        keep[v] = false;
        merged = true;
      }
    }
    if (merged) {
      rebuild_level(w, k, target, keep);
      changed = true;
    }
  }
  return changed;
}

std::vector<std::size_t> in_degrees(const Level &parents, std::size_t size) {
  std::vector<std::size_t> deg(size, 0);
  for (const auto &node : parents) {
    ++deg[inner(node).e0];
    ++deg[inner(node).e1];
  }
  return deg;
}

void pad_levels(Work &w, std::size_t width) {
  for (std::size_t k = 1; k < w.bp.levels.size(); ++k) {
    while (w.bp.levels[k].size() < width) {
      const auto dist = distributions(w.bp);
      const auto deg = in_degrees(w.bp.levels[k - 1], w.bp.levels[k].size());
      std::optional<std::size_t> pick;
      for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] >= 2 && (!pick || dist[k][v] > dist[k][*pick]))
          pick = v;
      if (!pick)
        break;
      const auto copy = static_cast<std::uint32_t>(w.bp.levels[k].size());
      w.bp.levels[k].push_back(w.bp.levels[k][*pick]);
      w.origin[k].push_back(w.origin[k][*pick]);
      // Move the last edge entering the chosen node over to its copy.
      Level &parents = w.bp.levels[k - 1];
      for (std::size_t j = parents.size(); j-- > 0;) {
        auto &node = std::get<InnerNode>(parents[j]);
        if (node.e1 == *pick) {
          node.e1 = copy;
          break;
        }
        if (node.e0 == *pick) {
          node.e0 = copy;
          break;
        }
      }
    }
  }
}

void sort_levels(Work &w) {
  const auto dist = distributions(w.bp);
  for (std::size_t k = 1; k < w.bp.levels.size(); ++k) {
    std::vector<std::uint32_t> order(w.bp.levels[k].size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return dist[k][a] > dist[k][b]; });
    std::vector<std::uint32_t> position(order.size());
    Level nodes;
    std::vector<NodeOrigin> origin;
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = static_cast<std::uint32_t>(i);
      nodes.push_back(w.bp.levels[k][order[i]]);
      origin.push_back(w.origin[k][order[i]]);
    }
    w.bp.levels[k] = std::move(nodes);
    w.origin[k] = std::move(origin);
    remap_edges(w.bp.levels[k - 1], position);
  }
}

} // namespace

NormalizedProgram normalize_traced(const BranchingProgram &bp, const NormalizeOptions &options) {
  ensure_valid(bp, unbounded_width);
  Work w{bp, {}};
  for (std::size_t k = 0; k < bp.levels.size(); ++k) {
    w.origin.emplace_back();
    for (std::size_t v = 0; v < bp.levels[k].size(); ++v)
      w.origin.back().push_back({k, v});
  }

  bool changed = true;
  while (changed) {
    changed = prune_unreachable(w);
    while (collapse_one_identity(w))
      changed = true;
    changed = merge_duplicates(w) || changed;
  }
  if (options.pad_width)
    pad_levels(w, options.width);
  sort_levels(w);
  return {std::move(w.bp), std::move(w.origin)};
}

bool is_level_sorted(const BranchingProgram &bp) {
  const auto dist = distributions(bp);
  for (std::size_t k = 1; k < dist.size(); ++k)
    for (std::size_t i = 0; i < dist[k].size(); ++i) {
      if (dist[k][i].is_zero())
        return false;
      if (i > 0 && dist[k][i] > dist[k][i - 1])
        return false;
    }
  return true;
}

} // namespace robp
