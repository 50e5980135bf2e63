#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/search.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

inline constexpr int kExhaustiveCycleLimit = 16;
inline constexpr int kColorCodingMaxLength = 12;

// ---------------------------------------------------------------------------
// Exact finders

/// Some triangle (through `anchor` if given), or nullopt if there is none.
inline std::optional<std::vector<Vertex>> find_triangle(const Graph& g,
                                                        std::optional<Vertex> anchor = std::nullopt) {
  auto through = [&](Vertex u) -> std::optional<std::vector<Vertex>> {
    auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const Vertex v = nu[i];
      if (!anchor && v < u) continue;
      auto nv = g.neighbors(v);
      // merge-intersect N(u) and N(v), looking past v
      auto a = nu.begin() + static_cast<std::ptrdiff_t>(i) + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return std::vector<Vertex>{u, v, *a};
      }
    }
    return std::nullopt;
  };
  if (anchor) return through(*anchor);
  for (Vertex u = 0; u < g.order(); ++u)
    if (auto c = through(u)) return c;
  return std::nullopt;
}

/// Some 4-cycle (through `anchor` if given), or nullopt if there is none.
/// Looks for two distinct paths s-x-w and s-x'-w.
inline std::optional<std::vector<Vertex>> find_four_cycle(const Graph& g,
                                                          std::optional<Vertex> anchor = std::nullopt) {
  std::vector<Vertex> via(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> touched;
  auto through = [&](Vertex s) -> std::optional<std::vector<Vertex>> {
    std::optional<std::vector<Vertex>> found;
    for (Vertex x : g.neighbors(s)) {
      for (Vertex w : g.neighbors(x)) {
        if (w == s) continue;
        if (via[w] >= 0) {
          found = std::vector<Vertex>{s, via[w], w, x};
          break;
        }
        via[w] = x;
        touched.push_back(w);
      }
      if (found) break;
    }
    for (Vertex w : touched) via[w] = -1;
    touched.clear();
    return found;
  };
  if (anchor) return through(*anchor);
  for (Vertex s = 0; s < g.order(); ++s)
    if (auto c = through(s)) return c;
  return std::nullopt;
}

namespace detail {

/// Exhaustive search for a cycle on exactly t vertices whose smallest vertex
/// is `s`, pruned by distances inside the vertices >= s.
class ExactCycleDfs {
 public:
  ExactCycleDfs(const Graph& g, int t) : g_(g), t_(t), used_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<std::vector<Vertex>> from(Vertex s, std::optional<Vertex> anchor) {
    s_ = s;
    anchor_ = anchor;
    dist_.assign(static_cast<std::size_t>(g_.order()), -1);
    std::deque<Vertex> q{s};
    dist_[s] = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g_.neighbors(u))
        if (w > s && dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          q.push_back(w);
        }
    }
    if (anchor_ && (*anchor_ < s || dist_[*anchor_] < 0)) return std::nullopt;
    path_.assign(1, s);
    used_[s] = 1;
    const bool ok = grow();
    for (Vertex v : path_) used_[v] = 0;
    if (!ok) return std::nullopt;
    return path_;
  }

 private:
  bool grow() {
    const Vertex cur = path_.back();
    const int k = static_cast<int>(path_.size());
    if (k == t_) {
      if (!g_.adjacent(cur, s_)) return false;
      return !anchor_ || used_[*anchor_];
    }
    for (Vertex w : g_.neighbors(cur)) {
      if (w <= s_ || used_[w] || dist_[w] < 0) continue;
      // after w we still need t-k-1 more steps to get back to s
      if (dist_[w] > t_ - k) continue;
      used_[w] = 1;
      path_.push_back(w);
      if (grow()) return true;
      path_.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  Vertex s_ = 0;
  std::optional<Vertex> anchor_;
  std::vector<int> dist_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
};

/// Self-avoiding random walk of t-2 steps from s, closed through a common
/// neighbour of the last vertex and s.
inline std::optional<std::vector<Vertex>> walk_closure(const Graph& g, int t, Vertex s, Rng& rng,
                                                       std::vector<char>& used) {
  std::vector<Vertex> path{s};
  used[s] = 1;
  auto release = [&] {
    for (Vertex v : path) used[v] = 0;
  };
  for (int step = 0; step < t - 2; ++step) {
    auto nb = g.neighbors(path.back());
    if (nb.empty()) break;
    const std::size_t offset = rng.index(nb.size());
    Vertex next = -1;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      Vertex w = nb[(offset + j) % nb.size()];
      if (!used[w]) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    used[next] = 1;
    path.push_back(next);
  }
  if (static_cast<int>(path.size()) != t - 1) {
    release();
    return std::nullopt;
  }
  Vertex a = path.back(), b = s;
  if (g.degree(a) > g.degree(b)) std::swap(a, b);
  auto nb = g.neighbors(a);
  const std::size_t offset = nb.empty() ? 0 : rng.index(nb.size());
  for (std::size_t j = 0; j < nb.size(); ++j) {
    Vertex x = nb[(offset + j) % nb.size()];
    if (!used[x] && g.adjacent(x, b)) {
      path.push_back(x);
      release();
      return path;
    }
  }
  release();
  return std::nullopt;
}

/// One colour-coding round: looks for a colourful t-cycle through a vertex
/// of colour 0 by dynamic programming over (vertex, colour set).
class ColorCodingRound {
 public:
  ColorCodingRound(const Graph& g, int t)
      : g_(g), t_(t), full_((1u << t) - 1), words_(((1u << t) + 63) / 64),
        reach_(static_cast<std::size_t>(g.order()) * words_, 0) {}

  std::optional<std::vector<Vertex>> run(const std::vector<int>& color, std::optional<Vertex> anchor) {
    color_ = &color;
    if (anchor) return from(*anchor);
    for (Vertex s = 0; s < g_.order(); ++s)
      if (color[s] == 0)
        if (auto c = from(s)) return c;
    return std::nullopt;
  }

 private:
  bool test(Vertex v, std::uint32_t mask) const {
    return (reach_[static_cast<std::size_t>(v) * words_ + mask / 64] >> (mask % 64)) & 1u;
  }
  void set(Vertex v, std::uint32_t mask) {
    reach_[static_cast<std::size_t>(v) * words_ + mask / 64] |= std::uint64_t{1} << (mask % 64);
    touched_.push_back({v, mask});
  }

  std::optional<std::vector<Vertex>> from(Vertex s) {
    const auto& color = *color_;
    std::vector<std::pair<Vertex, std::uint32_t>> frontier{{s, 1u << color[s]}}, next;
    set(s, 1u << color[s]);
    for (int k = 1; k < t_ && !frontier.empty(); ++k) {
      next.clear();
      for (auto [v, mask] : frontier)
        for (Vertex w : g_.neighbors(v)) {
          const std::uint32_t bit = 1u << color[w];
          if (w == s || (mask & bit)) continue;
          if (!test(w, mask | bit)) {
            set(w, mask | bit);
            next.push_back({w, mask | bit});
          }
        }
      frontier.swap(next);
    }
    std::optional<std::vector<Vertex>> found;
    for (auto [v, mask] : frontier)
      if (mask == full_ && g_.adjacent(v, s)) {
        found = reconstruct(s, v);
        break;
      }
    for (auto [v, mask] : touched_)
      reach_[static_cast<std::size_t>(v) * words_ + mask / 64] = 0;
    touched_.clear();
    return found;
  }

  std::vector<Vertex> reconstruct(Vertex s, Vertex end) const {
    const auto& color = *color_;
    std::vector<Vertex> rev{end};
    std::uint32_t mask = full_;
    Vertex cur = end;
    while (std::popcount(mask) > 1) {
      const std::uint32_t prev = mask ^ (1u << color[cur]);
      Vertex step = -1;
      for (Vertex u : g_.neighbors(cur)) {
        const bool start_ok = std::popcount(prev) == 1 ? u == s : u != s;
        if (start_ok && ((prev >> color[u]) & 1u) && test(u, prev)) {
          step = u;
          break;
        }
      }
      if (step < 0) throw std::logic_error("colour-coding reconstruction lost its trail");
      rev.push_back(step);
      cur = step;
      mask = prev;
    }
    return {rev.rbegin(), rev.rend()};
  }

  const Graph& g_;
  int t_;
  std::uint32_t full_;
  std::size_t words_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::pair<Vertex, std::uint32_t>> touched_;
  const std::vector<int>* color_ = nullptr;
};

}  // namespace detail

/// Which routes find_cycle_fixed_length may use. Tests switch routes off
/// to exercise the others in isolation.
struct FixedLengthRoutes {
  bool parity = true;
  bool exact_short = true;
  bool exhaustive = true;
  bool walks = true;
  bool color_coding = true;
};

/// A cycle on exactly t vertices (through `anchor` if given).
///
/// Absence is only ever reported with a proof: odd t in a bipartite graph,
/// exhaustive triangle / 4-cycle scans, or exhaustive search when n <= 16.
/// Otherwise a miss is reported as unknown.
inline CycleSearchResult find_cycle_fixed_length(const Graph& g, int t, const SearchBudget& budget,
                                                 std::uint64_t seed,
                                                 std::optional<Vertex> anchor = std::nullopt,
                                                 const FixedLengthRoutes& routes = {}) {
  const int n = g.order();
  if (t < 3 || t > n)
    throw std::invalid_argument("cycle length " + std::to_string(t) + " outside [3, " +
                                std::to_string(n) + "]");
  if (anchor) require_vertex(g, *anchor);
  auto hit = [&](std::vector<Vertex> c, std::string method) {
    CycleSearchResult r = CycleSearchResult::hit(std::move(c), std::move(method));
    check_cycle_witness(g, *r.witness, t, anchor, r.method);
    return r;
  };

  if (routes.parity && t % 2 == 1 && is_bipartite(g))
    return CycleSearchResult::absent("bipartite-parity", "odd cycle in a bipartite graph");

  if (routes.exact_short && (t == 3 || t == 4)) {
    auto c = t == 3 ? find_triangle(g, anchor) : find_four_cycle(g, anchor);
    if (c) return hit(std::move(*c), t == 3 ? "triangle-scan" : "four-cycle-scan");
    return CycleSearchResult::absent(t == 3 ? "triangle-scan" : "four-cycle-scan");
  }

  if (routes.exhaustive && n <= kExhaustiveCycleLimit) {
    detail::ExactCycleDfs dfs(g, t);
    for (Vertex s = 0; s < n; ++s)
      if (auto c = dfs.from(s, anchor)) return hit(std::move(*c), "exhaustive");
    return CycleSearchResult::absent("exhaustive");
  }

  Deadline deadline(budget.time_cap_seconds);
  Rng base(seed);
  std::string tried;
  if (routes.walks && budget.max_walks > 0) {
    tried += "walk-closure";
    Rng rng = base.split("walk-closure");
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (long long attempt = 0; attempt < budget.max_walks; ++attempt) {
      const Vertex s = anchor ? *anchor : rng.index(n);
      if (auto c = detail::walk_closure(g, t, s, rng, used)) return hit(std::move(*c), "walk-closure");
      if ((attempt & 1023) == 1023 && deadline.expired()) break;
    }
  }

  if (routes.color_coding && t <= kColorCodingMaxLength && !deadline.expired()) {
    tried += tried.empty() ? "color-coding" : ", color-coding";
    detail::ColorCodingRound round(g, t);
    std::vector<int> color(static_cast<std::size_t>(n));
    const long long rounds = budget.colorings_for(t);
    for (long long r = 0; r < rounds; ++r) {
      Rng rng = base.split("coloring", static_cast<std::uint64_t>(r));
      for (auto& c : color) c = rng.index(t);
      if (anchor) color[*anchor] = 0;
      if (auto c = round.run(color, anchor)) return hit(std::move(*c), "color-coding");
      if (deadline.expired()) {
        tried += " (time cap)";
        break;
      }
    }
  }
  return CycleSearchResult::miss(tried.empty() ? "none" : tried, "budget exhausted");
}

}  // namespace resilab
