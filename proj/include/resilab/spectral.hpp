#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "resilab/errors.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

enum class EigenMethod { dense, iterative };
enum class SolverMode { automatic, dense, iterative };

inline const char* to_string(EigenMethod m) { return m == EigenMethod::dense ? "dense" : "iterative"; }

inline constexpr int kDenseSolverLimit = 2000;
inline constexpr double kDenseTolerance = 1e-8;
inline constexpr double kIterativeTolerance = 1e-6;

struct SpectralEstimate {
  /// max(|lambda_2|, ..., |lambda_n|) of the adjacency matrix.
  double lambda = 0.0;
  /// Bound on |estimate - true value| for the eigenvalues involved.
  double residual = 0.0;
  double top = 0.0;
  double smallest = 0.0;
  EigenMethod method = EigenMethod::dense;
  /// Disconnected graphs are measured anyway; callers may want to warn.
  bool connected = true;
};

namespace detail {

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : g.neighbors(u)) a(u, w) = 1.0;
  return a;
}

inline void multiply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.setZero(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    double s = 0.0;
    for (Vertex w : g.neighbors(u)) s += x[w];
    y[u] = s;
  }
}

inline SpectralEstimate dense_second_eigenvalue(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = dense_adjacency(g);
  const bool vectors = n <= 600;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed", 0.0, 0.0);
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  SpectralEstimate out;
  out.method = EigenMethod::dense;
  out.top = values[n - 1];
  out.smallest = values[0];
  out.lambda = std::max(std::abs(values[0]), std::abs(values[n - 2]));
  if (vectors) {
    double worst = 0.0;
    for (int idx : {0, n - 2, n - 1}) {
      Eigen::VectorXd v = solver.eigenvectors().col(idx);
      worst = std::max(worst, (a * v - values[idx] * v).norm());
    }
    out.residual = worst;
  } else {
    // Backward-stable symmetric QR: error of order n * eps * ||A||.
    out.residual = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                   std::max(1, g.max_degree());
  }
  return out;
}

struct RitzPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = std::numeric_limits<double>::infinity();
};

struct RitzExtremes {
  RitzPair high;
  RitzPair low;
};

/// Lanczos with full reorthogonalisation on P A P, where P projects out the
/// `locked` orthonormal vectors. Returns the extreme Ritz pairs; residuals
/// are recomputed explicitly as ||P A P y - theta y||.
inline RitzExtremes lanczos_extremes(const Graph& g, const std::vector<Eigen::VectorXd>& locked,
                                     Eigen::VectorXd start, int steps) {
  const int n = g.order();
  auto project = [&](Eigen::VectorXd& x) {
    for (const auto& u : locked) x -= u.dot(x) * u;
  };
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    Eigen::VectorXd px = x;
    project(px);
    multiply(g, px, y);
    project(y);
  };
  project(start);
  double norm = start.norm();
  if (norm == 0.0) throw NumericalError("Lanczos start vector vanished after deflation", 0.0, 0.0);
  std::vector<Eigen::VectorXd> basis;
  basis.push_back(start / norm);
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(n);
  for (int j = 0; j < steps; ++j) {
    apply(basis[j], w);
    alpha.push_back(basis[j].dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
      project(w);
    }
    const double b = w.norm();
    if (j + 1 == steps || b < 1e-12) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  const int m = static_cast<int>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
  for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
  auto ritz = [&](int idx) {
    RitzPair pair;
    pair.value = small.eigenvalues()[idx];
    pair.vector = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) pair.vector += small.eigenvectors()(i, idx) * basis[i];
    pair.vector.normalize();
    Eigen::VectorXd r(n);
    apply(pair.vector, r);
    pair.residual = (r - pair.value * pair.vector).norm();
    return pair;
  };
  return {ritz(m - 1), ritz(0)};
}

inline SpectralEstimate iterative_second_eigenvalue(const Graph& g, std::uint64_t seed) {
  const int n = g.order();
  const int steps = std::min(n, 160);
  constexpr int kRestarts = 30;
  Rng rng = Rng(seed).split("lanczos");
  Eigen::VectorXd start(n);
  for (int i = 0; i < n; ++i) start[i] = rng.uniform() - 0.5;

  RitzPair top;
  for (int r = 0; r < kRestarts; ++r) {
    top = lanczos_extremes(g, {}, start, steps).high;
    if (top.residual <= kIterativeTolerance) break;
    start = top.vector;
  }
  if (top.residual > kIterativeTolerance)
    throw NumericalError("Lanczos did not converge on the top eigenpair", top.value, top.residual);

  for (int i = 0; i < n; ++i) start[i] = rng.uniform() - 0.5;
  RitzExtremes rest;
  for (int r = 0; r < kRestarts; ++r) {
    rest = lanczos_extremes(g, {top.vector}, start, steps);
    if (std::max(rest.high.residual, rest.low.residual) <= kIterativeTolerance) break;
    start = rest.high.vector + rest.low.vector;
  }
  SpectralEstimate out;
  out.method = EigenMethod::iterative;
  out.top = top.value;
  out.smallest = rest.low.value;
  out.lambda = std::max(std::abs(rest.high.value), std::abs(rest.low.value));
  out.residual = std::max({top.residual, rest.high.residual, rest.low.residual});
  if (out.residual > kIterativeTolerance)
    throw NumericalError("Lanczos did not converge on the deflated operator", out.lambda,
                         out.residual);
  return out;
}

}  // namespace detail

/// Second largest absolute adjacency eigenvalue. Dense symmetric solve up to
/// 2000 vertices; above that (or when forced) Lanczos with the top
/// eigenvector deflated, taking the larger magnitude of both ends.
inline SpectralEstimate second_eigenvalue(const Graph& g, SolverMode mode = SolverMode::automatic,
                                          std::uint64_t seed = 0) {
  if (g.order() < 2) throw std::invalid_argument("second eigenvalue needs n >= 2");
  const bool dense = mode == SolverMode::dense ||
                     (mode == SolverMode::automatic && g.order() <= kDenseSolverLimit);
  SpectralEstimate out =
      dense ? detail::dense_second_eigenvalue(g) : detail::iterative_second_eigenvalue(g, seed);
  out.connected = is_connected(g);
  return out;
}

// ---------------------------------------------------------------------------

/// Measured degree and spectral data of a graph, read as an (n, eps', d, lambda)-graph.
struct PseudoRandomCert {
  int n = 0;
  int d_min = 0;
  int d_max = 0;
  int d_nominal = 0;
  double eps_prime = 0.0;
  double lambda = 0.0;
  EigenMethod method = EigenMethod::dense;
  double residual = 0.0;
  bool connected = true;
};

inline PseudoRandomCert certify_ndl(const Graph& g, SolverMode mode = SolverMode::automatic) {
  SpectralEstimate est = second_eigenvalue(g, mode);
  PseudoRandomCert cert;
  cert.n = g.order();
  cert.d_min = g.min_degree();
  cert.d_max = g.max_degree();
  cert.d_nominal = static_cast<int>(std::lround(g.average_degree()));
  cert.eps_prime = cert.d_nominal > 0
                       ? std::max(0.0, static_cast<double>(cert.d_nominal - cert.d_min) / cert.d_nominal)
                       : 0.0;
  cert.lambda = est.lambda;
  cert.method = est.method;
  cert.residual = est.residual;
  cert.connected = est.connected;
  return cert;
}

/// d^(k-1) / (n * lambda^(k-2)): the quantity that must be large for the
/// cycle-length-k resilience statements about (n, d, lambda)-graphs.
inline double pseudo_random_ratio(const PseudoRandomCert& cert, int k) {
  if (k < 3) throw std::invalid_argument("ratio needs k >= 3");
  const double d = cert.d_nominal;
  return std::pow(d, k - 1) / (cert.n * std::pow(cert.lambda, k - 2));
}

/// Lower bound on lambda forced for every d-regular graph on n vertices by
/// n d = tr(A^2) <= d^2 + (n - 1) lambda^2.
inline double lambda_trace_lower_bound(int n, double d) {
  if (n < 2 || !(d > 0.0) || d > n - 1)
    throw std::invalid_argument("trace bound needs 0 < d <= n - 1");
  return std::sqrt((n * d - d * d) / (n - 1));
}

// ---------------------------------------------------------------------------
// Expander mixing audit

struct MixingMode {
  enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
  /// Exhaustive: largest |X|, |Y| enumerated (0 = all sizes).
  int max_set_size = 0;
  /// Sampled: number of random (X, Y) pairs and their stream.
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static MixingMode exhaustive(int max_size = 0) { return {Kind::exhaustive, max_size, 0, 0}; }
  static MixingMode sampled(std::size_t count, std::uint64_t seed) {
    return {Kind::sampled, 0, count, seed};
  }
};

struct MixingReport {
  std::size_t pairs_checked = 0;
  /// Largest |e(X,Y) - d|X||Y|/n| - lambda sqrt(|X||Y|); <= 0 means the bound held.
  double max_violation = -std::numeric_limits<double>::infinity();
  VertexSet worst_x;
  VertexSet worst_y;
};

inline constexpr std::size_t kMixingSubsetGuard = 4096;

namespace detail {
inline double mixing_violation(std::uint64_t e, double d, int n, std::size_t x, std::size_t y,
                               double lambda) {
  const double expected = d * static_cast<double>(x) * static_cast<double>(y) / n;
  return std::abs(static_cast<double>(e) - expected) -
         lambda * std::sqrt(static_cast<double>(x) * static_cast<double>(y));
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}
}  // namespace detail

/// Audits |e(X,Y) - (d/n)|X||Y|| <= lambda sqrt(|X||Y|) with the certificate's
/// d_nominal and lambda.
inline MixingReport mixing_check(const Graph& g, const PseudoRandomCert& cert, const MixingMode& mode) {
  if (cert.n != g.order()) throw std::invalid_argument("certificate does not match graph order");
  const int n = g.order();
  const double d = cert.d_nominal;
  MixingReport report;
  if (mode.kind == MixingMode::Kind::exhaustive) {
    if (n > 63) throw std::invalid_argument("exhaustive mixing audit needs n <= 63; use sampled mode");
    const int cap = mode.max_set_size > 0 ? std::min(mode.max_set_size, n) : n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w : g.neighbors(u)) adj[u] |= std::uint64_t{1} << w;
    // Enumerate subsets by size via Gosper's hack.
    std::vector<std::uint64_t> subsets;
    for (int k = 1; k <= cap; ++k) {
      std::uint64_t s = (std::uint64_t{1} << k) - 1;
      const std::uint64_t limit = std::uint64_t{1} << n;
      while (s < limit) {
        subsets.push_back(s);
        if (subsets.size() > kMixingSubsetGuard)
          throw std::invalid_argument("exhaustive mixing audit too large; restrict set size or sample");
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
    std::uint64_t worst_x = 0, worst_y = 0;
    for (std::uint64_t xs : subsets) {
      const auto x_size = static_cast<std::size_t>(std::popcount(xs));
      for (std::uint64_t ys : subsets) {
        std::uint64_t e = 0;
        for (std::uint64_t rest = xs; rest; rest &= rest - 1)
          e += static_cast<std::uint64_t>(std::popcount(adj[std::countr_zero(rest)] & ys));
        const double v = detail::mixing_violation(e, d, n, x_size,
                                                  static_cast<std::size_t>(std::popcount(ys)),
                                                  cert.lambda);
        ++report.pairs_checked;
        if (v > report.max_violation) {
          report.max_violation = v;
          worst_x = xs;
          worst_y = ys;
        }
      }
    }
    report.worst_x = detail::mask_to_set(worst_x);
    report.worst_y = detail::mask_to_set(worst_y);
    return report;
  }

  Rng base(mode.seed);
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::vector<char> in_y(static_cast<std::size_t>(n), 0);
  for (std::size_t pair = 0; pair < mode.samples; ++pair) {
    Rng rng = base.split("mixing-pair", pair);
    auto draw = [&] {
      const std::size_t size = 1 + rng.index(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pool[i] = i;
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.index(n - i)]);
      return std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    };
    std::vector<Vertex> xs = draw();
    std::vector<Vertex> ys = draw();
    for (Vertex y : ys) in_y[y] = 1;
    std::uint64_t e = 0;
    for (Vertex x : xs)
      for (Vertex w : g.neighbors(x)) e += in_y[w];
    for (Vertex y : ys) in_y[y] = 0;
    const double v = detail::mixing_violation(e, d, n, xs.size(), ys.size(), cert.lambda);
    ++report.pairs_checked;
    if (v > report.max_violation) {
      report.max_violation = v;
      report.worst_x = VertexSet(xs);
      report.worst_y = VertexSet(ys);
    }
  }
  return report;
}

/// For regular graphs: bipartite iff the smallest eigenvalue is -d.
inline bool spectrally_bipartite(const SpectralEstimate& est, double tolerance = 1e-6) {
  return std::abs(est.top + est.smallest) <= tolerance;
}

}  // namespace resilab
