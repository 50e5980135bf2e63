#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/rotation.hpp"
#include "resilab/cycles/search.hpp"
#include "resilab/expansion.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

struct MediumCycleResult {
  std::optional<CycleWitness> witness;
  /// Last stage reached: layers, min-degree, layered-path, pruning, long-path,
  /// return-path, done.
  std::string stage;
  std::string diagnostic;
  int candidates_tried = 0;
};

namespace detail {

/// Path z_{j}, z_{j-1}, ..., z_1 with z_i in layer i, z_j adjacent to
/// `from` and z_1 adjacent to the origin, avoiding the marked vertices.
inline bool layered_return(const Graph& g, const LayerStructure& layers, Vertex from, int j,
                           const std::vector<char>& avoid, std::vector<Vertex>& out) {
  if (j == 0) return g.adjacent(from, layers.origin);
  for (Vertex z : g.neighbors(from)) {
    if (avoid[z] || !layers.layers[static_cast<std::size_t>(j)].contains(z)) continue;
    out.push_back(z);
    if (layered_return(g, layers, z, j - 1, avoid, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

/// Cycle of length t through v built the way the medium-length argument
/// goes: BFS layers from v, a dense core G1 inside the (l-1)-th layer, a
/// layered path v..v_{l-1} into G1, pruning of N^(l-2)(v_1) from G1, a long
/// path of t - 2l + 2 edges from v_{l-1} inside the pruned core, and a
/// return path from its far end down the layers to v.
inline MediumCycleResult proof_guided_medium_cycle(const Graph& g, Vertex v, int t, int l,
                                                   const SearchBudget& budget, std::uint64_t seed) {
  require_vertex(g, v);
  if (l < 2) throw std::invalid_argument("medium cycle construction needs l >= 2");
  if (t < 2 * l - 1)
    throw std::invalid_argument("medium cycle construction needs t >= 2l - 1 (t=" + std::to_string(t) +
                                ", l=" + std::to_string(l) + ")");
  if (t > g.order()) throw std::invalid_argument("cycle length exceeds the vertex count");
  MediumCycleResult out;
  out.stage = "layers";
  const LayerStructure layers = grow_layers(g, v, l - 1);
  const VertexSet& top = layers.layers.back();
  if (top.size() < 2) {
    out.diagnostic = "layer " + std::to_string(l - 1) + " has fewer than two vertices";
    return out;
  }

  out.stage = "min-degree";
  const Subgraph layer_graph = induced_subgraph(g, top);
  const double avg = layer_graph.graph.average_degree();
  const VertexSet core_local = min_degree_core(layer_graph.graph, avg / 2.0);
  if (core_local.empty()) {
    out.diagnostic = "no subgraph of minimum degree avg/2 inside layer " + std::to_string(l - 1);
    return out;
  }
  std::vector<Vertex> core;
  for (Vertex x : core_local) core.push_back(layer_graph.to_parent[x]);
  const Subgraph g1 = induced_subgraph(g, VertexSet(core));
  const int delta1 = g1.graph.min_degree();
  const double repeel = std::max(1.0, delta1 - std::log(static_cast<double>(g.order())));
  const int t_prime = t - 2 * l + 2;

  Rng rng(seed);
  std::vector<Vertex> candidates = core;
  rng.shuffle(candidates.begin(), candidates.end());
  const int max_candidates = std::max(1, budget.max_restarts);
  std::vector<char> avoid(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t c = 0; c < candidates.size() && out.candidates_tried < max_candidates; ++c) {
    ++out.candidates_tried;
    const Vertex top_vertex = candidates[c];

    out.stage = "layered-path";
    std::vector<Vertex> down{top_vertex};  // v_{l-1}, v_{l-2}, ..., v_0 = v
    for (int j = l - 2; j >= 0; --j) {
      Vertex pick = -1;
      std::uint64_t seen = 0;
      for (Vertex w : g.neighbors(down.back()))
        if (layers.layers[static_cast<std::size_t>(j)].contains(w) && rng.below(++seen) == 0) pick = w;
      down.push_back(pick);
    }
    std::vector<Vertex> up(down.rbegin(), down.rend());  // v_0 .. v_{l-1}

    out.stage = "pruning";
    const VertexSet pruned = kth_neighborhood(g, up[1], l - 2);
    std::vector<Vertex> kept;
    for (Vertex x : core)
      if (x == top_vertex || !pruned.contains(x)) kept.push_back(x);
    const Subgraph g2 = induced_subgraph(g, VertexSet(kept));
    const VertexSet g2_core = min_degree_core(g2.graph, repeel);
    const auto local_top = static_cast<Vertex>(
        std::lower_bound(g2.to_parent.begin(), g2.to_parent.end(), top_vertex) - g2.to_parent.begin());
    if (!g2_core.contains(local_top)) {
      out.diagnostic = "re-peeling removed v_{l-1}";
      continue;
    }
    const Subgraph g3 = induced_subgraph(g2.graph, g2_core);
    const auto start = static_cast<Vertex>(
        std::lower_bound(g3.to_parent.begin(), g3.to_parent.end(), local_top) - g3.to_parent.begin());

    out.stage = "long-path";
    if (g3.graph.order() < t_prime + 1) {
      out.diagnostic = "pruned core has " + std::to_string(g3.graph.order()) + " vertices, need " +
                       std::to_string(t_prime + 1);
      continue;
    }
    PathWitness local_path =
        posa_long_path(g3.graph, start, budget, derive_seed(seed, "medium-path", c), t_prime);
    if (local_path.length() < t_prime) {
      out.diagnostic = "long path reached " + std::to_string(local_path.length()) + " of " +
                       std::to_string(t_prime) + " edges";
      continue;
    }
    std::vector<Vertex> ws;  // v_{l-1} = w_0, w_1, ..., w_{t'}
    for (Vertex x : local_path.vertices) ws.push_back(g2.to_parent[g3.to_parent[x]]);

    out.stage = "return-path";
    for (Vertex x : up) avoid[x] = 1;
    std::vector<Vertex> back;
    const bool ok = detail::layered_return(g, layers, ws.back(), l - 2, avoid, back);
    for (Vertex x : up) avoid[x] = 0;
    if (!ok) {
      out.diagnostic = "no layered return path from w_{t'} avoiding v_1..v_{l-2}";
      continue;
    }
    std::vector<Vertex> cycle(up.begin(), up.end());
    cycle.insert(cycle.end(), ws.begin() + 1, ws.end());
    cycle.insert(cycle.end(), back.begin(), back.end());
    CycleWitness w{std::move(cycle)};
    check_cycle_witness(g, w, t, v, "proof_guided_medium_cycle");
    out.witness = std::move(w);
    out.stage = "done";
    out.diagnostic.clear();
    return out;
  }
  return out;
}

}  // namespace resilab
