#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/rotation.hpp"
#include "resilab/cycles/search.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

namespace detail {

/// Cheap exact obstructions to a Hamilton cycle: disconnected, a vertex of
/// degree < 2, or bipartite with unequal sides.
inline bool hamilton_obstructed(const Graph& g) {
  if (g.order() < 3 || g.min_degree() < 2 || !is_connected(g)) return true;
  if (auto side = two_coloring(g)) {
    const auto ones = std::count(side->begin(), side->end(), 1);
    return 2 * ones != static_cast<long>(side->size());
  }
  return false;
}

}  // namespace detail

/// Cycle of length t: sample a t-subset V* (containing `anchor` if given)
/// and look for a Hamilton cycle of G[V*].
inline CycleSearchResult long_cycle_via_subset(const Graph& g, int t, const SearchBudget& budget,
                                               std::uint64_t seed,
                                               std::optional<Vertex> anchor = std::nullopt) {
  const int n = g.order();
  if (t < 3 || t > n) throw std::invalid_argument("cycle length outside [3, n]");
  if (anchor) require_vertex(g, *anchor);
  Rng base(seed);
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  int obstructed = 0;
  const int attempts = std::max(1, budget.subset_attempts);
  for (int a = 0; a < attempts; ++a) {
    Rng rng = base.split("subset", static_cast<std::uint64_t>(a));
    for (int i = 0; i < n; ++i) pool[i] = i;
    int fixed = 0;
    if (anchor) {
      std::swap(pool[0], pool[*anchor]);
      fixed = 1;
    }
    for (int i = fixed; i < t; ++i) std::swap(pool[i], pool[i + rng.index(n - i)]);
    const Subgraph sub = induced_subgraph(g, VertexSet(std::vector<Vertex>(pool.begin(), pool.begin() + t)));
    if (detail::hamilton_obstructed(sub.graph)) {
      ++obstructed;
      continue;
    }
    if (auto ham = posa_hamilton_cycle(sub.graph, budget, rng.split("hamilton").seed())) {
      CycleSearchResult r = CycleSearchResult::hit(sub.lift(ham->vertices), "subset-hamilton");
      check_cycle_witness(g, *r.witness, t, anchor, r.method);
      return r;
    }
  }
  return CycleSearchResult::miss("subset-hamilton", std::to_string(attempts) + " subsets tried, " +
                                                        std::to_string(obstructed) + " obstructed");
}

/// Cuts a cycle of length t out of `cycle` using one chord: a chord between
/// positions i < j splits the cycle into two cycles of lengths j-i+1 and
/// |C|-(j-i)+1.
inline CycleSearchResult cycle_via_chord(const Graph& g, const CycleWitness& cycle, int t,
                                         std::optional<Vertex> anchor = std::nullopt) {
  const auto& c = cycle.vertices;
  const int len = static_cast<int>(c.size());
  if (t == len && (!anchor || cycle.contains(*anchor))) {
    CycleSearchResult r = CycleSearchResult::hit(c, "chord");
    check_cycle_witness(g, *r.witness, t, anchor, r.method);
    return r;
  }
  if (t < 3 || t > len) return CycleSearchResult::miss("chord", "length outside the host cycle");
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < len; ++i) pos[c[i]] = i;
  const int a = anchor ? pos[*anchor] : -1;
  if (anchor && a < 0) return CycleSearchResult::miss("chord", "anchor not on the host cycle");
  for (int i = 0; i < len; ++i) {
    for (Vertex w : g.neighbors(c[i])) {
      const int j = pos[w];
      if (j <= i + 1) continue;
      const int span = j - i;
      std::vector<Vertex> out;
      if (span + 1 == t && (!anchor || (i <= a && a <= j))) {
        out.assign(c.begin() + i, c.begin() + j + 1);
      } else if (len - span + 1 == t && (!anchor || a <= i || a >= j)) {
        out.assign(c.begin() + j, c.end());
        out.insert(out.end(), c.begin(), c.begin() + i + 1);
      } else {
        continue;
      }
      CycleSearchResult r = CycleSearchResult::hit(std::move(out), "chord");
      check_cycle_witness(g, *r.witness, t, anchor, r.method);
      return r;
    }
  }
  return CycleSearchResult::miss("chord", "no chord of the right span");
}

/// A long cycle: a Hamilton cycle when one is found, otherwise the cycle
/// closed by the farthest back neighbour of the end of a long path.
inline std::optional<CycleWitness> long_cycle_heuristic(const Graph& g, const SearchBudget& budget,
                                                        std::uint64_t seed) {
  if (g.order() < 3) return std::nullopt;
  if (auto ham = posa_hamilton_cycle(g, budget, derive_seed(seed, "host-hamilton"))) return ham;
  std::optional<CycleWitness> best;
  Rng rng(derive_seed(seed, "host-path"));
  SearchBudget single = budget;
  single.max_restarts = 1;
  for (int r = 0; r < std::clamp(budget.max_restarts, 1, 5); ++r) {
    const Vertex start = rng.index(g.order());
    PathWitness p = posa_long_path(g, start, single, rng.split("path", static_cast<std::uint64_t>(r)).seed());
    const auto& path = p.vertices;
    const Vertex end = path.back();
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
      if (!g.adjacent(path[i], end)) continue;
      if (!best || best->length() < static_cast<int>(path.size() - i))
        best = CycleWitness{std::vector<Vertex>(path.begin() + static_cast<std::ptrdiff_t>(i), path.end())};
      break;
    }
    if (best && best->length() == g.order()) break;
  }
  return best;
}

}  // namespace resilab
