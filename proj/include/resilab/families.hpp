#pragma once

#include <string>
#include <vector>

#include "resilab/graph.hpp"

// Small deterministic graphs used as fixtures and sanity inputs.
namespace resilab::families {

inline Graph empty(int n) { return Graph::from_edges(n, std::vector<Edge>{}, "empty-" + std::to_string(n)); }

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back(make_edge(0, n - 1));
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

/// K_{1,leaves} with centre 0.
inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges, "K1," + std::to_string(leaves));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph::from_edges(a + b, edges, "K" + std::to_string(a) + "," + std::to_string(b));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    edges.push_back(make_edge(i, i + 5));
  }
  return Graph::from_edges(10, edges, "petersen");
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph::from_edges(a.order() + b.order(), edges, a.label() + "+" + b.label());
}

}  // namespace resilab::families
