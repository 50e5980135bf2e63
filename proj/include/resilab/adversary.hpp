#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "resilab/cycles/fixed_length.hpp"
#include "resilab/graph.hpp"
#include "resilab/graph_io.hpp"
#include "resilab/rng.hpp"

namespace resilab {

/// A set of edges to delete from a base graph, with the per-vertex tallies
/// it incurs.
struct DeletionPlan {
  std::string kind;
  std::string base_label;
  /// Seed of the deletion order (for bipartition plans, of the chosen attempt).
  std::uint64_t seed = 0;
  std::vector<Edge> edges;  // sorted, unique
  std::vector<int> per_vertex_deleted;
  /// Uniform per-vertex budget; ignored when vertex_caps is non-empty.
  int budget = 0;
  /// Per-vertex caps (random capped adversary).
  std::vector<int> vertex_caps;
  /// Whether the adversary reached its goal (all within-part edges deleted,
  /// or no l-cycle left).
  bool complete = true;
  /// For the cycle destroyer: whether "no l-cycle left" was proved rather
  /// than merely not refuted.
  bool certified = true;
  int attempts = 1;
  /// Side of every vertex for bipartition plans.
  std::vector<int> sides;

  int cap(Vertex v) const { return vertex_caps.empty() ? budget : vertex_caps[v]; }
  Graph residual(const Graph& g) const { return delete_edges(g, edges); }
};

/// floor(c * scale), with a small guard against 0.3 * 100 = 29.999...
inline int budget_from_fraction(double c, double scale) {
  if (c < 0 || scale < 0) throw std::invalid_argument("budget fraction and scale must be non-negative");
  return static_cast<int>(std::floor(c * scale + 1e-9));
}

struct BudgetAudit {
  bool pass = true;
  std::optional<Vertex> worst_vertex;
  int worst_excess = 0;
  std::string diagnostic;
};

/// Recomputes every tally from the edge list and checks it against the caps.
inline BudgetAudit validate_budget(const DeletionPlan& plan, const Graph& g) {
  BudgetAudit audit;
  std::vector<int> tally(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : plan.edges) {
    if (!g.valid_vertex(e.u) || !g.valid_vertex(e.v) || !g.adjacent(e.u, e.v)) {
      audit.pass = false;
      audit.diagnostic = "edge absent from base graph: " + std::to_string(e.u) + "-" + std::to_string(e.v);
      return audit;
    }
    ++tally[e.u];
    ++tally[e.v];
  }
  if (!plan.vertex_caps.empty() && plan.vertex_caps.size() != tally.size()) {
    audit.pass = false;
    audit.diagnostic = "per-vertex caps do not match the vertex count";
    return audit;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const int excess = tally[v] - plan.cap(v);
    if (excess > 0 && (!audit.worst_vertex || excess > audit.worst_excess)) {
      audit.pass = false;
      audit.worst_vertex = v;
      audit.worst_excess = excess;
    }
  }
  if (!audit.pass)
    audit.diagnostic = "vertex " + std::to_string(*audit.worst_vertex) + " exceeds its budget by " +
                       std::to_string(audit.worst_excess);
  else if (!plan.per_vertex_deleted.empty() && plan.per_vertex_deleted != tally)
    audit.diagnostic = "stored tallies disagree with the edge list";
  return audit;
}

namespace detail {

/// Deletes edges of `order` whose endpoints both have room, continuing from
/// the tallies of `plan`.
inline void greedy_capped_deletion(const std::vector<Edge>& order, DeletionPlan& plan) {
  std::vector<Edge> added;
  for (const Edge& e : order) {
    if (plan.per_vertex_deleted[e.u] >= plan.cap(e.u) || plan.per_vertex_deleted[e.v] >= plan.cap(e.v))
      continue;
    if (std::binary_search(plan.edges.begin(), plan.edges.end(), e)) continue;
    ++plan.per_vertex_deleted[e.u];
    ++plan.per_vertex_deleted[e.v];
    added.push_back(e);
  }
  plan.edges.insert(plan.edges.end(), added.begin(), added.end());
  std::sort(plan.edges.begin(), plan.edges.end());
}

inline void require_prior(const DeletionPlan& prior, const std::string& kind, const Graph& g) {
  if (prior.kind != kind || static_cast<int>(prior.per_vertex_deleted.size()) != g.order())
    throw std::invalid_argument("prior plan does not belong to this adversary and graph");
}

}  // namespace detail

/// Bipartition adversary for an explicit side assignment: deletes
/// within-side edges in a random order while both endpoints have budget.
inline DeletionPlan bipartition_plan(const Graph& g, const std::vector<int>& sides, int budget,
                                     std::uint64_t seed, const DeletionPlan* prior = nullptr) {
  if (static_cast<int>(sides.size()) != g.order()) throw std::invalid_argument("side vector has wrong size");
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  DeletionPlan plan;
  if (prior) {
    detail::require_prior(*prior, "bipartition", g);
    if (prior->budget > budget) throw std::invalid_argument("extension budget must not shrink");
    plan = *prior;
  } else {
    plan.per_vertex_deleted.assign(static_cast<std::size_t>(g.order()), 0);
  }
  plan.kind = "bipartition";
  plan.base_label = g.label();
  plan.seed = seed;
  plan.budget = budget;
  plan.sides = sides;
  std::vector<Edge> within;
  for (const Edge& e : g.edges())
    if (sides[e.u] == sides[e.v]) within.push_back(e);
  Rng rng(derive_seed(seed, "bipartition-order"));
  rng.shuffle(within.begin(), within.end());
  detail::greedy_capped_deletion(within, plan);
  plan.complete = plan.edges.size() >= within.size();
  return plan;
}

/// Bipartition adversary with a random balanced partition. If the budget
/// does not suffice to delete every within-part edge, up to `retries`
/// fresh partitions are tried; the attempt with the fewest surviving
/// within-part edges is kept, with complete = false if none succeeded.
inline DeletionPlan bipartition_adversary(const Graph& g, int budget, std::uint64_t seed, int retries = 5) {
  const int n = g.order();
  std::optional<DeletionPlan> best;
  std::size_t best_left = 0;
  for (int a = 0; a <= retries; ++a) {
    Rng rng(derive_seed(seed, "bipartition", static_cast<std::uint64_t>(a)));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm.begin(), perm.end());
    std::vector<int> sides(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n / 2; ++i) sides[perm[i]] = 0;
    DeletionPlan plan = bipartition_plan(g, sides, budget, rng.split("order").seed());
    std::size_t left = 0;
    for (const Edge& e : g.edges()) left += sides[e.u] == sides[e.v];
    left -= plan.edges.size();
    if (!best || left < best_left) {
      best = std::move(plan);
      best_left = left;
    }
    best->attempts = a + 1;
    if (best_left == 0) break;
  }
  return *best;
}

/// Continues a bipartition plan at a larger budget with the same partition
/// and deletion order, so the result contains the prior plan.
inline DeletionPlan extend_bipartition(const Graph& g, const DeletionPlan& prior, int budget) {
  detail::require_prior(prior, "bipartition", g);
  DeletionPlan plan = bipartition_plan(g, prior.sides, budget, prior.seed, &prior);
  plan.attempts = prior.attempts;
  return plan;
}

/// Random capped adversary: walks the edges in random order and deletes an
/// edge whenever both endpoints are below floor(fraction * degree).
/// With a prior plan of the same seed, the walk resumes from its tallies
/// so the returned plan contains the prior one.
inline DeletionPlan random_capped_adversary(const Graph& g, double fraction, std::uint64_t seed,
                                            const DeletionPlan* prior = nullptr) {
  if (fraction < 0 || fraction > 1) throw std::invalid_argument("fraction must lie in [0, 1]");
  DeletionPlan plan;
  if (prior) {
    detail::require_prior(*prior, "random-capped", g);
    plan = *prior;
  } else {
    plan.per_vertex_deleted.assign(static_cast<std::size_t>(g.order()), 0);
  }
  plan.kind = "random-capped";
  plan.base_label = g.label();
  plan.seed = seed;
  plan.vertex_caps.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    plan.vertex_caps[v] = static_cast<int>(std::floor(fraction * g.degree(v) + 1e-9));
    if (prior && plan.vertex_caps[v] < prior->cap(v))
      throw std::invalid_argument("extension fraction must not shrink");
  }
  plan.budget = *std::max_element(plan.vertex_caps.begin(), plan.vertex_caps.end());
  std::vector<Edge> order = g.edges();
  Rng rng(derive_seed(seed, "random-capped-order"));
  rng.shuffle(order.begin(), order.end());
  detail::greedy_capped_deletion(order, plan);
  return plan;
}

namespace detail {

/// Among the candidate edges whose endpoints both have budget left, the one
/// maximising the smaller slack of its endpoints; ties go to the smallest
/// edge.
template <class Slack>
std::optional<Edge> pick_cycle_edge(const std::vector<Edge>& candidates, const std::vector<int>& tally, int budget,
                                    Slack slack) {
  std::optional<Edge> best;
  double best_slack = 0;
  for (const Edge& e : candidates) {
    if (tally[e.u] >= budget || tally[e.v] >= budget) continue;
    const double s = std::min(slack(e.u), slack(e.v));
    if (!best || s > best_slack || (s == best_slack && e < *best)) {
      best = e;
      best_slack = s;
    }
  }
  return best;
}

inline std::vector<Edge> cycle_edges(const std::vector<Vertex>& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
  return out;
}

/// All triangles (u < v < w) in lexicographic order.
inline std::vector<std::array<Vertex, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else {
          out.push_back({u, v, *a});
          ++a;
          ++b;
        }
      }
    }
  }
  return out;
}

/// One greedy pass over the triangles in the given order. The slack of a
/// vertex is its unused budget minus half the triangles through it that
/// are still waiting to be processed.
inline bool destroy_triangles_pass(const Graph& g, const std::vector<std::array<Vertex, 3>>& order, int budget,
                                   DeletionPlan& plan) {
  const int n = g.order();
  auto& tally = plan.per_vertex_deleted;
  tally.assign(static_cast<std::size_t>(n), 0);
  plan.edges.clear();
  std::vector<int> pending(static_cast<std::size_t>(n), 0);
  for (const auto& t : order)
    for (Vertex x : t) ++pending[x];
  std::vector<Edge> deleted;
  auto gone = [&](const Edge& e) { return std::binary_search(deleted.begin(), deleted.end(), e); };
  auto slack = [&](Vertex x) { return (budget - tally[x]) - 0.5 * pending[x]; };
  bool complete = true;
  for (const auto& t : order) {
    for (Vertex x : t) --pending[x];
    const std::vector<Edge> es{make_edge(t[0], t[1]), make_edge(t[0], t[2]), make_edge(t[1], t[2])};
    if (gone(es[0]) || gone(es[1]) || gone(es[2])) continue;
    auto pick = pick_cycle_edge(es, tally, budget, slack);
    if (!pick) {
      complete = false;
      break;
    }
    ++tally[pick->u];
    ++tally[pick->v];
    plan.edges.push_back(*pick);
    deleted.insert(std::upper_bound(deleted.begin(), deleted.end(), *pick), *pick);
  }
  std::sort(plan.edges.begin(), plan.edges.end());
  return complete;
}

}  // namespace detail

/// Repeatedly takes a cycle on l vertices and deletes one of its edges,
/// preferring the edge whose endpoints keep the most slack (ties: smallest
/// edge), until none is left or every edge of a found cycle is blocked by
/// the budget.
///
/// For l = 3 every triangle is listed up front and processed in order,
/// with slack discounted by the triangles still pending at each vertex.
/// Attempt 0 uses lexicographic order; when it blocks, up to `retries`
/// seeded shuffles of the order are tried and the first complete pass (or
/// else the first pass) is returned.
inline DeletionPlan cycle_destroyer(const Graph& g, int l, int budget, std::uint64_t seed,
                                    const SearchBudget& search = SearchBudget::thorough(), int retries = 5) {
  const int n = g.order();
  if (l < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  DeletionPlan plan;
  plan.kind = "destroy-cycle-" + std::to_string(l);
  plan.base_label = g.label();
  plan.seed = seed;
  plan.budget = budget;
  plan.per_vertex_deleted.assign(static_cast<std::size_t>(n), 0);

  if (l == 3) {
    std::vector<std::array<Vertex, 3>> order = detail::list_triangles(g);
    plan.complete = detail::destroy_triangles_pass(g, order, budget, plan);
    for (int a = 1; a <= retries && !plan.complete; ++a) {
      DeletionPlan retry = plan;
      Rng rng(derive_seed(seed, "destroyer-order", static_cast<std::uint64_t>(a)));
      rng.shuffle(order.begin(), order.end());
      retry.attempts = a + 1;
      if (detail::destroy_triangles_pass(g, order, budget, retry)) {
        retry.complete = true;
        return retry;
      }
      plan.attempts = a + 1;
    }
    return plan;
  }

  auto& tally = plan.per_vertex_deleted;
  auto slack = [&](Vertex x) { return static_cast<double>(budget - tally[x]); };
  Graph current = g;
  for (std::uint64_t round = 0;; ++round) {
    if (l > n) break;
    CycleSearchResult r = find_cycle_fixed_length(current, l, search, derive_seed(seed, "destroy", round));
    if (!r.found()) {
      plan.certified = r.verdict == Verdict::absent;
      break;
    }
    auto pick = detail::pick_cycle_edge(detail::cycle_edges(r.witness->vertices), tally, budget, slack);
    if (!pick) {
      plan.complete = false;
      break;
    }
    ++tally[pick->u];
    ++tally[pick->v];
    plan.edges.push_back(*pick);
    const Edge doomed[] = {*pick};
    current = delete_edges(current, doomed);
  }
  std::sort(plan.edges.begin(), plan.edges.end());
  return plan;
}

// ---------------------------------------------------------------------------
// Plan files: an edge list plus a metadata sidecar.

inline void save_plan(const std::string& path, const DeletionPlan& plan, int n) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plan file " + path);
  io::write_edge_list(out, n, plan.edges, plan.kind + " deletion plan for " + plan.base_label);
  nlohmann::json meta = {{"kind", plan.kind},           {"base_label", plan.base_label},
                         {"seed", plan.seed},           {"budget", plan.budget},
                         {"complete", plan.complete},   {"certified", plan.certified},
                         {"attempts", plan.attempts},   {"deleted", plan.edges.size()}};
  if (!plan.vertex_caps.empty()) meta["vertex_caps"] = plan.vertex_caps;
  if (!plan.sides.empty()) meta["sides"] = plan.sides;
  io::write_metadata(path, meta);
}

/// Reads a plan and recomputes its tallies against the base graph.
inline DeletionPlan load_plan(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plan file " + path);
  io::EdgeListFile file = io::parse_edge_list(in, path);
  if (file.n != g.order()) throw std::runtime_error(path + ": plan vertex count does not match the graph");
  const nlohmann::json meta = io::read_metadata(path);
  DeletionPlan plan;
  plan.kind = meta.value("kind", std::string("unknown"));
  plan.base_label = meta.value("base_label", std::string());
  plan.seed = meta.value("seed", std::uint64_t{0});
  plan.budget = meta.value("budget", 0);
  plan.complete = meta.value("complete", true);
  plan.certified = meta.value("certified", true);
  plan.attempts = meta.value("attempts", 1);
  if (meta.contains("vertex_caps")) plan.vertex_caps = meta["vertex_caps"].get<std::vector<int>>();
  if (meta.contains("sides")) plan.sides = meta["sides"].get<std::vector<int>>();
  plan.edges = std::move(file.edges);
  std::sort(plan.edges.begin(), plan.edges.end());
  plan.per_vertex_deleted.assign(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : plan.edges) {
    ++plan.per_vertex_deleted[e.u];
    ++plan.per_vertex_deleted[e.v];
  }
  return plan;
}

}  // namespace resilab
