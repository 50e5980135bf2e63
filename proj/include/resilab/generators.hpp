#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/errors.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

struct GnpParams {
  int n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct RegularParams {
  int n = 1;
  int d = 0;
  std::uint64_t seed = 0;
};

namespace detail {
inline std::string format_double(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}
}  // namespace detail

/// Binomial random graph. Pairs are visited in canonical (u, v) order and
/// each consumes exactly one uniform draw; the pair is an edge iff the draw
/// is below p. Hence for a fixed seed, raising p only ever adds edges.
inline Graph gen_gnp(const GnpParams& params) {
  if (params.n < 1) throw std::invalid_argument("G(n,p) needs n >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("G(n,p) needs 0 <= p <= 1");
  Rng rng = Rng(params.seed).split("gnp");
  std::vector<Edge> edges;
  const int n = params.n;
  edges.reserve(static_cast<std::size_t>(params.p * n * (n - 1) / 2 * 1.1) + 16);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < params.p) edges.push_back({u, v});
  return Graph::from_edges(n, edges,
                           "gnp(n=" + std::to_string(n) + ",p=" + detail::format_double(params.p) +
                               ",seed=" + std::to_string(params.seed) + ")");
}

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

/// Paley graph on Z_q: u ~ v iff u - v is a nonzero square mod q.
inline Graph gen_paley(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw std::invalid_argument("Paley graph needs a prime q = 1 (mod 4), got " + std::to_string(q));
  std::vector<char> residue(static_cast<std::size_t>(q), 0);
  for (std::int64_t x = 1; x < q; ++x) residue[(x * x) % q] = 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (residue[v - u]) edges.push_back({u, v});
  return Graph::from_edges(q, edges, "paley(q=" + std::to_string(q) + ")");
}

inline constexpr int kPairingRestarts = 500;

/// Random d-regular simple graph from the pairing model. Stubs are matched
/// one pair at a time; a pair that would form a loop or a repeated edge is
/// redrawn, and the whole matching restarts when no admissible pair is left.
inline Graph gen_random_regular(const RegularParams& params) {
  const int n = params.n;
  const int d = params.d;
  if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("regular graph needs 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("regular graph needs n*d even");
  Rng rng = Rng(params.seed).split("regular");
  const std::string label = "regular(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                            ",seed=" + std::to_string(params.seed) + ")";
  for (int attempt = 0; attempt < kPairingRestarts; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    auto linked = [&](Vertex a, Vertex b) {
      for (Vertex w : adj[a])
        if (w == b) return true;
      return false;
    };
    auto pair_at = [&](std::size_t i, std::size_t j) {
      const Vertex a = stubs[i], b = stubs[j];
      adj[a].push_back(b);
      adj[b].push_back(a);
      const std::size_t hi = std::max(i, j), lo = std::min(i, j);
      stubs[hi] = stubs.back();
      stubs.pop_back();
      stubs[lo] = stubs.back();
      stubs.pop_back();
    };
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        const std::size_t i = rng.index(stubs.size());
        const std::size_t j = rng.index(stubs.size());
        if (i == j || stubs[i] == stubs[j] || linked(stubs[i], stubs[j])) continue;
        pair_at(i, j);
        paired = true;
      }
      if (paired) continue;
      // Many consecutive rejections: take the first admissible pair, if any.
      stuck = true;
      for (std::size_t i = 0; i < stubs.size() && stuck; ++i)
        for (std::size_t j = i + 1; j < stubs.size(); ++j)
          if (stubs[i] != stubs[j] && !linked(stubs[i], stubs[j])) {
            pair_at(i, j);
            stuck = false;
            break;
          }
    }
    if (stuck) continue;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w : adj[u])
        if (u < w) edges.push_back({u, w});
    return Graph::from_edges(n, edges, label);
  }
  throw ResourceError("pairing model exceeded " + std::to_string(kPairingRestarts) + " restarts for " +
                      label);
}

}  // namespace resilab
