#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/errors.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"
#include "resilab/spectral.hpp"

namespace resilab {

// ---------------------------------------------------------------------------
// Expansion ratio |N(X) \ X| / |X|

struct SizeRange {
  int lo = 1;
  int hi = 1;
};

struct ExpansionMode {
  enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
  std::size_t per_size = 20000;
  std::uint64_t seed = 0;

  static ExpansionMode exhaustive() { return {}; }
  static ExpansionMode sampled(std::size_t per_size, std::uint64_t seed) {
    return {Kind::sampled, per_size, seed};
  }
};

inline constexpr double kEnumerationGuard = 1e6;
inline constexpr std::size_t kStoredViolations = 16;

struct ExpansionViolation {
  /// "posa": |N(X)\X| < 2|X| - 1 with |X| <= t.  "doubling": |N(X)\X| < 2|X|.
  std::string lemma;
  VertexSet set;
};

struct ExpansionReport {
  SizeRange sizes;
  ExpansionMode mode;
  std::size_t sets_checked = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  VertexSet witness;
  int posa_t = 0;
  std::size_t posa_violations = 0;
  std::size_t doubling_violations = 0;
  std::vector<ExpansionViolation> violations;

  /// Whether every checked set of size <= posa_t expanded by 2|X| - 1.
  bool posa_hypothesis_holds() const { return posa_violations == 0; }
};

namespace detail {

class ExpansionScanner {
 public:
  ExpansionScanner(const Graph& g, ExpansionReport& report)
      : g_(g), report_(report), stamp_(static_cast<std::size_t>(g.order()), 0) {}

  void check(const std::vector<Vertex>& xs) {
    ++epoch_;
    for (Vertex x : xs) stamp_[x] = epoch_ * 2;  // member
    std::size_t outside = 0;
    for (Vertex x : xs)
      for (Vertex w : g_.neighbors(x))
        if (stamp_[w] < epoch_ * 2 - 1) {
          stamp_[w] = epoch_ * 2 - 1;  // counted neighbour
          ++outside;
        }
    const auto size = xs.size();
    const double ratio = static_cast<double>(outside) / static_cast<double>(size);
    ++report_.sets_checked;
    if (ratio < report_.min_ratio) {
      report_.min_ratio = ratio;
      report_.witness = VertexSet(xs);
    }
    auto record = [&](const char* lemma) {
      if (report_.violations.size() < kStoredViolations)
        report_.violations.push_back({lemma, VertexSet(xs)});
    };
    if (static_cast<int>(size) <= report_.posa_t && outside + 1 < 2 * size) {
      ++report_.posa_violations;
      record("posa");
    }
    if (outside < 2 * size) {
      ++report_.doubling_violations;
      record("doubling");
    }
  }

 private:
  const Graph& g_;
  ExpansionReport& report_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
};

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Minimum |N(X)\X|/|X| over sets with sizes in `sizes`, plus the verdict
/// for the rotation-extension hypothesis |N(X)\X| >= 2|X| - 1 (|X| <= posa_t;
/// posa_t = 0 means sizes.hi).
inline ExpansionReport expansion_ratio(const Graph& g, SizeRange sizes, const ExpansionMode& mode,
                                       int posa_t = 0) {
  const int n = g.order();
  if (sizes.lo < 1 || sizes.hi < sizes.lo || sizes.hi > n)
    throw std::invalid_argument("size range must lie within [1, n]");
  ExpansionReport report;
  report.sizes = sizes;
  report.mode = mode;
  report.posa_t = posa_t > 0 ? posa_t : sizes.hi;
  detail::ExpansionScanner scan(g, report);

  if (mode.kind == ExpansionMode::Kind::exhaustive) {
    double total = 0;
    for (int k = sizes.lo; k <= sizes.hi; ++k) total += detail::binomial(n, k);
    if (total > kEnumerationGuard)
      throw std::invalid_argument("exhaustive expansion check would enumerate " +
                                  std::to_string(static_cast<long long>(total)) +
                                  " sets (limit 1e6); use sampled mode");
    for (int k = sizes.lo; k <= sizes.hi; ++k) {
      std::vector<Vertex> xs(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) xs[i] = i;
      while (true) {
        scan.check(xs);
        int i = k - 1;
        while (i >= 0 && xs[i] == n - k + i) --i;
        if (i < 0) break;
        ++xs[i];
        for (int j = i + 1; j < k; ++j) xs[j] = xs[j - 1] + 1;
      }
    }
    return report;
  }

  Rng base(mode.seed);
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  for (int k = sizes.lo; k <= sizes.hi; ++k) {
    Rng rng = base.split("expansion-size", static_cast<std::uint64_t>(k));
    for (std::size_t s = 0; s < mode.per_size; ++s) {
      for (int i = 0; i < n; ++i) pool[i] = i;
      for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.index(n - i)]);
      scan.check(std::vector<Vertex>(pool.begin(), pool.begin() + k));
    }
  }
  return report;
}

/// Combines reports over disjoint size ranges (e.g. exhaustive small sizes
/// plus sampled larger ones).
inline ExpansionReport merge(ExpansionReport a, const ExpansionReport& b) {
  a.sizes = {std::min(a.sizes.lo, b.sizes.lo), std::max(a.sizes.hi, b.sizes.hi)};
  a.sets_checked += b.sets_checked;
  if (b.min_ratio < a.min_ratio) {
    a.min_ratio = b.min_ratio;
    a.witness = b.witness;
  }
  a.posa_t = std::max(a.posa_t, b.posa_t);
  a.posa_violations += b.posa_violations;
  a.doubling_violations += b.doubling_violations;
  for (const auto& v : b.violations)
    if (a.violations.size() < kStoredViolations) a.violations.push_back(v);
  return a;
}

// ---------------------------------------------------------------------------
// BFS layers N^(i)(v)

struct LayerStructure {
  Vertex origin = 0;
  std::vector<VertexSet> layers;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& layer : layers) out.push_back(layer.size());
    return out;
  }
  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

/// Layers 0..depth built with N^(i+1) = N(N^(i)) \ (N^(i) ∪ N^(i-1)).
inline LayerStructure grow_layers(const Graph& g, Vertex v, int depth) {
  require_vertex(g, v);
  if (depth < 1) throw std::invalid_argument("layer depth must be at least 1");
  LayerStructure out;
  out.origin = v;
  out.layers.push_back(VertexSet{v});
  VertexSet previous;
  for (int i = 1; i <= depth; ++i) {
    const VertexSet& current = out.layers.back();
    std::vector<Vertex> next;
    for (Vertex w : neighbors_of_set(g, current))
      if (!current.contains(w) && !previous.contains(w)) next.push_back(w);
    previous = current;
    out.layers.push_back(VertexSet(std::move(next)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Codegree into the (l-2)-th layer

struct CodegreeVerdict {
  bool pass = true;
  double threshold = 0.0;
  std::size_t max_codegree = 0;
  std::optional<Vertex> worst;
  std::size_t vertices_checked = 0;
};

/// For every w at distance >= l-2 from v (or unreachable), measures
/// |N^(l-2)(v) ∩ N(w)| and compares against `threshold` (default ln n).
inline CodegreeVerdict codegree_check(const Graph& g, Vertex v, int l,
                                      std::optional<double> threshold = std::nullopt) {
  require_vertex(g, v);
  if (l < 3) throw std::invalid_argument("codegree check needs l >= 3");
  CodegreeVerdict out;
  out.threshold = threshold.value_or(std::log(static_cast<double>(std::max(2, g.order()))));
  const std::vector<int> dist = bfs_distances(g, v);
  const int level = l - 2;
  std::vector<char> in_level(static_cast<std::size_t>(g.order()), 0);
  for (Vertex w = 0; w < g.order(); ++w) in_level[w] = dist[w] == level;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (dist[w] >= 0 && dist[w] < level) continue;
    ++out.vertices_checked;
    std::size_t c = 0;
    for (Vertex x : g.neighbors(w)) c += in_level[x];
    if (!out.worst || c > out.max_codegree) {
      out.max_codegree = c;
      out.worst = w;
    }
  }
  out.pass = static_cast<double>(out.max_codegree) <= out.threshold;
  return out;
}

// ---------------------------------------------------------------------------
// Twin layers X_i(v), Y_i(v)

struct TwinLayerOptions {
  /// Stop scale multiplier: stop once |X_i| >= delta_cap * (lambda/d)^2 * n.
  double delta_cap = 8.0;
  /// Lower floor on the stop threshold.
  double min_stop = 0.0;
};

struct TwinLayerStructure {
  Vertex origin = 0;
  /// Index 0 holds {v}; index i holds X_i (resp. Y_i).
  std::vector<VertexSet> x_layers;
  std::vector<VertexSet> y_layers;
  VertexSet z_union;
  int l = 0;
  /// |X_{i+1}| / |X_i| for every step built after X_1.
  std::vector<double> growth_ratios;
  /// Whether step i was shrunk to the (eps/(8k)) n cap.
  std::vector<bool> capped;
  double stop_threshold = 0.0;
  std::size_t cap_size = 0;
};

/// Grows disjoint, equal-sized layer pairs from v in g_prime. X_1 and Y_1
/// take floor(d/4) distinct neighbours each; X_{i+1} ⊆ N(X_i)\Z_i and
/// Y_{i+1} ⊆ N(Y_i)\Z_i, with the shared frontier dealt out alternately.
/// Throws StructuralError if a frontier runs dry or the depth bound
/// floor((k-1)/2) is reached before the stop threshold.
inline TwinLayerStructure grow_twin_layers(const Graph& g, Vertex v, const PseudoRandomCert& cert,
                                           double eps, int k, const TwinLayerOptions& options = {}) {
  require_vertex(g, v);
  if (k < 3) throw std::invalid_argument("twin layers need k >= 3");
  if (!(eps > 0.0)) throw std::invalid_argument("twin layers need eps > 0");
  const double d = cert.d_nominal;
  if (g.min_degree() < (0.5 + eps) * d)
    throw std::invalid_argument("twin layers need minimum degree >= (1/2 + eps) d; have " +
                                std::to_string(g.min_degree()) + " < " +
                                std::to_string((0.5 + eps) * d));
  const int n = g.order();
  TwinLayerStructure out;
  out.origin = v;
  const double lambda_ratio = cert.lambda * cert.lambda / (d * d);
  out.stop_threshold = std::max(options.min_stop, options.delta_cap * lambda_ratio * n);
  out.cap_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(eps * n / (8.0 * k))));
  const int max_depth = std::max(1, (k - 1) / 2);

  const std::size_t seed_size = std::max<std::size_t>(1, static_cast<std::size_t>(d / 4));
  auto nb = g.neighbors(v);
  if (nb.size() < 2 * seed_size)
    throw StructuralError("origin has too few neighbours to seed X_1 and Y_1", 0, {1});
  out.x_layers = {VertexSet{v}, VertexSet(std::vector<Vertex>(nb.begin(), nb.begin() + seed_size))};
  out.y_layers = {VertexSet{v}, VertexSet(std::vector<Vertex>(nb.begin() + seed_size,
                                                              nb.begin() + 2 * seed_size))};
  std::vector<char> in_z(static_cast<std::size_t>(n), 0);
  in_z[v] = 1;
  for (Vertex x : out.x_layers[1]) in_z[x] = 1;
  for (Vertex y : out.y_layers[1]) in_z[y] = 1;

  auto sizes = [&] {
    std::vector<std::size_t> s;
    for (const auto& x : out.x_layers) s.push_back(x.size());
    return s;
  };

  int i = 1;
  bool last_capped = false;
  while (true) {
    const std::size_t current = out.x_layers[i].size();
    if (static_cast<double>(current) >= out.stop_threshold || last_capped) break;
    if (i >= max_depth)
      throw StructuralError("stop threshold not reached within depth floor((k-1)/2)", i, sizes());
    std::vector<Vertex> only_x, only_y, shared;
    VertexSet fx = neighbors_of_set(g, out.x_layers[i]);
    VertexSet fy = neighbors_of_set(g, out.y_layers[i]);
    for (Vertex w : fx)
      if (!in_z[w]) (fy.contains(w) ? shared : only_x).push_back(w);
    for (Vertex w : fy)
      if (!in_z[w] && !fx.contains(w)) only_y.push_back(w);
    std::vector<Vertex> cand_x = only_x, cand_y = only_y;
    for (std::size_t j = 0; j < shared.size(); ++j) (j % 2 == 0 ? cand_x : cand_y).push_back(shared[j]);
    std::size_t size = std::min(cand_x.size(), cand_y.size());
    if (size == 0) throw StructuralError("frontier exhausted before the stop threshold", i, sizes());
    last_capped = size > out.cap_size;
    if (last_capped) size = out.cap_size;
    std::sort(cand_x.begin(), cand_x.end());
    std::sort(cand_y.begin(), cand_y.end());
    cand_x.resize(size);
    cand_y.resize(size);
    for (Vertex x : cand_x) in_z[x] = 1;
    for (Vertex y : cand_y) in_z[y] = 1;
    out.growth_ratios.push_back(static_cast<double>(size) / static_cast<double>(current));
    out.capped.push_back(last_capped);
    out.x_layers.push_back(VertexSet(std::move(cand_x)));
    out.y_layers.push_back(VertexSet(std::move(cand_y)));
    ++i;
  }
  out.l = i;
  std::vector<Vertex> z;
  for (Vertex w = 0; w < n; ++w)
    if (in_z[w]) z.push_back(w);
  out.z_union = VertexSet(std::move(z));
  return out;
}

/// Empty string when the structure satisfies: X_0 = Y_0 = {v}; X_i ∩ Y_i = ∅
/// and |X_i| = |Y_i| for i >= 1; X_{i+1} ⊆ N(X_i) \ Z_i and likewise for Y.
inline std::string twin_layer_violation(const Graph& g, const TwinLayerStructure& ts) {
  if (ts.x_layers.size() != ts.y_layers.size() || ts.x_layers.size() != static_cast<std::size_t>(ts.l) + 1)
    return "layer count mismatch";
  if (ts.x_layers[0] != VertexSet{ts.origin} || ts.y_layers[0] != VertexSet{ts.origin})
    return "layer 0 is not {v}";
  std::vector<char> in_z(static_cast<std::size_t>(g.order()), 0);
  in_z[ts.origin] = 1;
  for (int i = 1; i <= ts.l; ++i) {
    const auto& x = ts.x_layers[i];
    const auto& y = ts.y_layers[i];
    if (x.size() != y.size()) return "unequal sizes at layer " + std::to_string(i);
    for (Vertex w : x)
      if (y.contains(w)) return "X and Y intersect at layer " + std::to_string(i);
    VertexSet nx = neighbors_of_set(g, ts.x_layers[i - 1]);
    VertexSet ny = neighbors_of_set(g, ts.y_layers[i - 1]);
    for (Vertex w : x)
      if (!nx.contains(w) || in_z[w]) return "X_" + std::to_string(i) + " escapes N(X_{i-1}) \\ Z";
    for (Vertex w : y)
      if (!ny.contains(w) || in_z[w]) return "Y_" + std::to_string(i) + " escapes N(Y_{i-1}) \\ Z";
    for (Vertex w : x) in_z[w] = 1;
    for (Vertex w : y) in_z[w] = 1;
  }
  return {};
}

// ---------------------------------------------------------------------------

struct HalfSpreadVerdict {
  bool pass = false;
  std::size_t neighborhood = 0;
  double required = 0.0;
};

/// |N(X)| >= (1/2 + eps/2) n.
inline HalfSpreadVerdict large_set_halfspread_check(const Graph& g, const VertexSet& xs, double eps) {
  if (xs.empty()) throw std::invalid_argument("half-spread check needs a nonempty set");
  HalfSpreadVerdict out;
  out.neighborhood = neighbors_of_set(g, xs).size();
  out.required = (0.5 + eps / 2.0) * g.order();
  out.pass = static_cast<double>(out.neighborhood) >= out.required;
  return out;
}

}  // namespace resilab
