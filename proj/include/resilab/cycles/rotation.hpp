#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/search.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

namespace detail {

/// A path under Pósa rotations. Tracks each vertex's position and the
/// number of its neighbours that are neither on the path nor blocked.
class RotationPath {
 public:
  explicit RotationPath(const Graph& g, const std::vector<char>* blocked = nullptr)
      : g_(g),
        pos_(static_cast<std::size_t>(g.order()), -1),
        free_(static_cast<std::size_t>(g.order()), 0),
        blocked_(blocked) {
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v)) free_[v] += !is_blocked(w);
    path_.reserve(static_cast<std::size_t>(g.order()));
  }

  void reset(Vertex start) {
    while (!path_.empty()) pop();
    push(start);
  }

  const std::vector<Vertex>& path() const { return path_; }
  std::size_t size() const { return path_.size(); }
  Vertex front() const { return path_.front(); }
  Vertex back() const { return path_.back(); }
  bool on_path(Vertex v) const { return pos_[v] >= 0; }
  bool is_blocked(Vertex v) const { return blocked_ && (*blocked_)[v]; }
  bool is_free(Vertex v) const { return !on_path(v) && !is_blocked(v); }
  int free_degree(Vertex v) const { return free_[v]; }

  /// Appends the free neighbour of the back end with the fewest free
  /// neighbours of its own (ties broken at random).
  bool extend(Rng& rng) {
    Vertex best = -1;
    int best_free = 0;
    std::uint64_t ties = 0;
    for (Vertex w : g_.neighbors(back())) {
      if (!is_free(w)) continue;
      if (best < 0 || free_[w] < best_free) {
        best = w;
        best_free = free_[w];
        ties = 1;
      } else if (free_[w] == best_free && rng.below(++ties) == 0) {
        best = w;
      }
    }
    if (best < 0) return false;
    push(best);
    return true;
  }

  void push(Vertex v) {
    pos_[v] = static_cast<int>(path_.size());
    path_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_[w];
  }

  void pop() {
    Vertex v = path_.back();
    path_.pop_back();
    pos_[v] = -1;
    for (Vertex w : g_.neighbors(v)) ++free_[w];
  }

  void reverse() { reverse_range(0, path_.size()); }

  /// One rotation at the back end: pick a pivot path[i] adjacent to the
  /// back (i < size-2) and reverse path[i+1..]. Pivots whose new endpoint
  /// satisfies `good` are preferred. Returns false if no pivot exists.
  template <class Good>
  bool rotate(Rng& rng, Good good) {
    const std::size_t k = path_.size();
    if (k < 3) return false;
    int pick = -1;
    int fallback = -1;
    std::uint64_t good_seen = 0, any_seen = 0;
    for (Vertex w : g_.neighbors(back())) {
      const int i = pos_[w];
      if (i < 0 || i + 2 >= static_cast<int>(k)) continue;
      if (rng.below(++any_seen) == 0) fallback = i;
      if (good(path_[i + 1]) && rng.below(++good_seen) == 0) pick = i;
    }
    if (pick < 0) pick = fallback;
    if (pick < 0) return false;
    reverse_range(static_cast<std::size_t>(pick) + 1, k);
    return true;
  }

  /// For a closed path (back adjacent to front): reorder to
  /// path[i+1..], path[0..i] so that path[i] becomes the back end.
  void reroot_cycle(std::size_t i) {
    std::rotate(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(i) + 1, path_.end());
    for (std::size_t j = 0; j < path_.size(); ++j) pos_[path_[j]] = static_cast<int>(j);
  }

  /// Replaces the back end by a free vertex.
  void replace_back(Vertex v) {
    pop();
    push(v);
  }

 private:
  void reverse_range(std::size_t first, std::size_t last) {
    std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(first),
                 path_.begin() + static_cast<std::ptrdiff_t>(last));
    for (std::size_t j = first; j < last; ++j) pos_[path_[j]] = static_cast<int>(j);
  }

  const Graph& g_;
  std::vector<Vertex> path_;
  std::vector<int> pos_;
  std::vector<int> free_;
  const std::vector<char>* blocked_;
};

}  // namespace detail

/// Longest path found from `start` by extension and rotation (start stays
/// fixed as the first vertex). Stops early once `target_length` edges are
/// reached.
inline PathWitness posa_long_path(const Graph& g, Vertex start, const SearchBudget& budget,
                                  std::uint64_t seed, std::optional<int> target_length = std::nullopt) {
  require_vertex(g, start);
  const std::size_t target =
      static_cast<std::size_t>(std::min(target_length.value_or(g.order() - 1), g.order() - 1)) + 1;
  const long long max_rot = budget.rotations_for(g.order());
  Deadline deadline(budget.time_cap_seconds);
  Rng base(seed);
  detail::RotationPath p(g);
  std::vector<Vertex> best{start};
  for (int r = 0; r < std::max(1, budget.max_restarts) && best.size() < target; ++r) {
    Rng rng = base.split("long-path-restart", static_cast<std::uint64_t>(r));
    p.reset(start);
    long long rotations = 0;
    while (p.size() < target) {
      if (p.extend(rng)) continue;
      if (p.size() > best.size()) best = p.path();
      if (++rotations > max_rot || ((rotations & 255) == 0 && deadline.expired())) break;
      if (!p.rotate(rng, [&](Vertex x) { return p.free_degree(x) > 0; })) break;
    }
    if (p.size() > best.size()) best = p.path();
    if (deadline.expired()) break;
  }
  if (best.size() > target) best.resize(target);
  PathWitness out{std::move(best)};
  check_path_witness(g, out, "posa_long_path");
  return out;
}

/// Hamilton cycle by extension, rotation, cycle re-rooting and closure.
/// nullopt means none was found within the budget (not a proof of absence).
inline std::optional<CycleWitness> posa_hamilton_cycle(const Graph& g, const SearchBudget& budget,
                                                       std::uint64_t seed) {
  const int n = g.order();
  if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return std::nullopt;
  const auto size = static_cast<std::size_t>(n);
  const long long max_rot = budget.rotations_for(n);
  Deadline deadline(budget.time_cap_seconds);
  Rng base(seed);
  detail::RotationPath p(g);
  for (int r = 0; r < std::max(1, budget.max_restarts); ++r) {
    Rng rng = base.split("hamilton-restart", static_cast<std::uint64_t>(r));
    p.reset(rng.index(n));
    long long rotations = 0;
    while (true) {
      if (p.extend(rng)) continue;
      if (p.free_degree(p.front()) > 0) {
        p.reverse();
        continue;
      }
      const bool closed = g.adjacent(p.back(), p.front());
      if (p.size() == size && closed) {
        CycleWitness c{p.path()};
        check_cycle_witness(g, c, n, std::nullopt, "posa_hamilton_cycle");
        return c;
      }
      if (closed) {
        std::size_t i = 0;
        while (i < p.size() && p.free_degree(p.path()[i]) == 0) ++i;
        if (i < p.size()) {
          p.reroot_cycle(i);
          continue;
        }
      }
      if (++rotations > max_rot || ((rotations & 255) == 0 && deadline.expired())) break;
      const bool spanning = p.size() == size;
      auto good = [&](Vertex x) {
        return spanning ? g.adjacent(x, p.front()) : p.free_degree(x) > 0;
      };
      if (rotations % n == 0) p.reverse();
      if (!p.rotate(rng, good)) {
        p.reverse();
        if (!p.rotate(rng, good)) break;
      }
    }
    if (deadline.expired()) break;
  }
  return std::nullopt;
}

struct PathSearchResult {
  Verdict verdict = Verdict::unknown;
  std::optional<PathWitness> witness;
  std::string method;
};

namespace detail {

inline bool exact_path_dfs(const Graph& g, Vertex target, int remaining, std::vector<Vertex>& path,
                           std::vector<char>& used) {
  const Vertex cur = path.back();
  if (remaining == 1) {
    if (!g.adjacent(cur, target)) return false;
    path.push_back(target);
    return true;
  }
  for (Vertex w : g.neighbors(cur)) {
    if (used[w] || w == target) continue;
    used[w] = 1;
    path.push_back(w);
    if (exact_path_dfs(g, target, remaining - 1, path, used)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

inline constexpr int kExhaustivePathLimit = 16;

/// A u-v path with exactly `length` edges. Small graphs are searched
/// exhaustively (so absence is certified); otherwise a path grows from u
/// with v blocked, and its free end is rotated or swapped until it lands
/// in N(v), at which point v is appended.
inline PathSearchResult fixed_endpoints_path(const Graph& g, Vertex u, Vertex v, int length,
                                             const SearchBudget& budget, std::uint64_t seed) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw std::invalid_argument("path endpoints must be distinct");
  const int n = g.order();
  if (length < 1 || length > n - 1)
    throw std::invalid_argument("path length must lie in [1, n-1]");
  auto finish = [&](std::vector<Vertex> path, std::string method) {
    PathWitness w{std::move(path)};
    if (w.length() != length || w.vertices.front() != u || w.vertices.back() != v)
      throw std::logic_error(method + " produced a path with the wrong shape");
    check_path_witness(g, w, method);
    return PathSearchResult{Verdict::found, std::move(w), std::move(method)};
  };
  if (n <= kExhaustivePathLimit || length == 1) {
    std::vector<Vertex> path{u};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[u] = 1;
    if (detail::exact_path_dfs(g, v, length, path, used)) return finish(std::move(path), "exhaustive");
    return {Verdict::absent, std::nullopt, "exhaustive"};
  }

  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  blocked[v] = 1;
  const auto k = static_cast<std::size_t>(length);  // vertices before v
  const long long max_rot = budget.rotations_for(n);
  Deadline deadline(budget.time_cap_seconds);
  Rng base(seed);
  detail::RotationPath p(g, &blocked);
  for (int r = 0; r < std::max(1, budget.max_restarts); ++r) {
    Rng rng = base.split("endpoint-path-restart", static_cast<std::uint64_t>(r));
    p.reset(u);
    long long rotations = 0;
    while (true) {
      if (p.size() < k) {
        if (p.extend(rng)) continue;
        if (++rotations > max_rot) break;
        if (!p.rotate(rng, [&](Vertex x) { return p.free_degree(x) > 0; })) break;
        continue;
      }
      if (g.adjacent(p.back(), v)) {
        std::vector<Vertex> path = p.path();
        path.push_back(v);
        return finish(std::move(path), "rotation");
      }
      if (k >= 2) {
        const Vertex prev = p.path()[k - 2];
        Vertex swap_in = -1;
        for (Vertex y : g.neighbors(prev))
          if (p.is_free(y) && g.adjacent(y, v)) {
            swap_in = y;
            break;
          }
        if (swap_in >= 0) {
          p.replace_back(swap_in);
          continue;
        }
      }
      if (++rotations > max_rot || ((rotations & 255) == 0 && deadline.expired())) break;
      if (!p.rotate(rng, [&](Vertex x) { return g.adjacent(x, v); })) break;
    }
    if (deadline.expired()) break;
  }
  return {Verdict::unknown, std::nullopt, "rotation"};
}

}  // namespace resilab
