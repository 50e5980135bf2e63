#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resilab {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : members_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) { normalize(); }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& ids() const { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  std::vector<Vertex> members_;
};

/// Immutable undirected simple graph on vertices 0..n-1, stored as
/// per-vertex sorted neighbour lists in one contiguous buffer.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an edge list. Rejects self-loops, out-of-range ids
  /// and duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges, std::string label = {}) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      ++deg[e.u];
      ++deg[e.v];
    }
    Graph g;
    g.label_ = std::move(label);
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
      g.adj_[fill[e.u]++] = e.v;
      g.adj_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v) {
      auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last)
        throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges, std::string label = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label));
  }

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return adj_.size() / 2; }
  const std::string& label() const { return label_; }

  Graph with_label(std::string label) const {
    Graph copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool adjacent(Vertex a, Vertex b) const {
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Edges in canonical (u, v) lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex w : neighbors(u))
        if (u < w) out.push_back({u, w});
    return out;
  }

  int min_degree() const {
    int d = order() > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  double average_degree() const {
    return order() == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / order();
  }

  /// Structural equality; labels are provenance and do not participate.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::string label_;
};

inline void require_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v))
    throw std::invalid_argument("invalid vertex id " + std::to_string(v) + " for graph on " +
                                std::to_string(g.order()) + " vertices");
}

inline void require_vertices(const Graph& g, const VertexSet& xs) {
  for (Vertex v : xs) require_vertex(g, v);
}

// ---------------------------------------------------------------------------
// Witnesses

struct PathWitness {
  std::vector<Vertex> vertices;
  /// Number of edges.
  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

struct CycleWitness {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
};

inline bool is_valid_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.valid_vertex(path[i]) || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

inline bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() >= 3 && is_valid_path(g, cycle) && g.adjacent(cycle.back(), cycle.front());
}

inline bool is_valid_path(const Graph& g, const PathWitness& p) { return is_valid_path(g, p.vertices); }
inline bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
  return is_valid_cycle(g, c.vertices);
}

// ---------------------------------------------------------------------------
// Neighbourhoods and counting

/// N(X): every vertex adjacent to at least one member of X. May intersect X.
inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& xs) {
  require_vertices(g, xs);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> out;
  for (Vertex x : xs)
    for (Vertex y : g.neighbors(x))
      if (!mark[y]) {
        mark[y] = 1;
        out.push_back(y);
      }
  return VertexSet(std::move(out));
}

/// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// N^(k)(v) via the recursion N^(k) = N(N^(k-1)) \ (N^(k-1) ∪ N^(k-2)),
/// i.e. the vertices at distance exactly k.
inline VertexSet kth_neighborhood(const Graph& g, Vertex v, int k) {
  require_vertex(g, v);
  if (k < 0) throw std::invalid_argument("neighbourhood depth must be non-negative");
  VertexSet before;
  VertexSet current{v};
  for (int level = 1; level <= k && !current.empty(); ++level) {
    VertexSet reach = neighbors_of_set(g, current);
    std::vector<Vertex> next;
    for (Vertex w : reach)
      if (!current.contains(w) && !before.contains(w)) next.push_back(w);
    before = std::move(current);
    current = VertexSet(std::move(next));
  }
  return current;
}

/// Number of ordered pairs (x, y) with x in X, y in Y and xy an edge.
/// e(X, X) = 2 e(X).
inline std::uint64_t edge_count_between(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  require_vertices(g, xs);
  require_vertices(g, ys);
  std::vector<char> in_y(static_cast<std::size_t>(g.order()), 0);
  for (Vertex y : ys) in_y[y] = 1;
  std::uint64_t count = 0;
  for (Vertex x : xs)
    for (Vertex w : g.neighbors(x)) count += in_y[w];
  return count;
}

// ---------------------------------------------------------------------------
// Derived graphs

/// G - H. Every edge of H must be present in G.
inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> doomed;
  doomed.reserve(removed.size());
  for (const Edge& e : removed) {
    const Edge n = make_edge(e.u, e.v);
    if (!g.valid_vertex(n.u) || !g.valid_vertex(n.v) || !g.adjacent(n.u, n.v))
      throw std::invalid_argument("cannot delete absent edge " + std::to_string(n.u) + "-" +
                                  std::to_string(n.v));
    doomed.push_back(n);
  }
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - doomed.size());
  for (const Edge& e : g.edges())
    if (!std::binary_search(doomed.begin(), doomed.end(), e)) kept.push_back(e);
  return Graph::from_edges(g.order(), kept, g.label());
}

/// G + H for edges absent from G.
inline Graph add_edges(const Graph& g, std::span<const Edge> added) {
  std::vector<Edge> all = g.edges();
  for (const Edge& e : added) {
    const Edge n = make_edge(e.u, e.v);
    if (g.valid_vertex(n.u) && g.valid_vertex(n.v) && g.adjacent(n.u, n.v))
      throw std::invalid_argument("edge already present " + std::to_string(n.u) + "-" +
                                  std::to_string(n.v));
    all.push_back(n);
  }
  return Graph::from_edges(g.order(), all, g.label());
}

/// Subgraph with vertices relabelled 0..k-1; to_parent[i] is the original id.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  std::vector<Vertex> lift(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    return out;
  }
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  require_vertices(g, keep);
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> to_parent(keep.ids());
  for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && local[w] >= 0) edges.push_back({local[u], local[w]});
  return {Graph::from_edges(static_cast<int>(to_parent.size()), edges, g.label()),
          std::move(to_parent)};
}

/// Repeatedly removes a vertex of degree < threshold (smallest degree
/// first, ties by lowest id). The surviving vertex set may be empty.
inline VertexSet min_degree_core(const Graph& g, double threshold) {
  if (threshold < 0) throw std::invalid_argument("threshold must be non-negative");
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    if (static_cast<double>(d) >= threshold) break;
    queue.erase(queue.begin());
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) kept.push_back(v);
  return VertexSet(std::move(kept));
}

/// The peeled subgraph itself; nullopt when everything peels away.
inline std::optional<Subgraph> min_degree_subgraph(const Graph& g, double threshold) {
  VertexSet core = min_degree_core(g, threshold);
  if (core.empty()) return std::nullopt;
  return induced_subgraph(g, core);
}

// ---------------------------------------------------------------------------
// Structure

/// Side (0/1) of every vertex if g is bipartite.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

inline int component_count(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_regular(const Graph& g) { return g.order() == 0 || g.min_degree() == g.max_degree(); }

}  // namespace resilab
