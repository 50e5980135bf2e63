#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/search.hpp"
#include "resilab/graph.hpp"

namespace resilab {

struct LengthVerdict {
  int t = 0;
  Verdict verdict = Verdict::unknown;
  std::string method;
  std::optional<CycleWitness> witness;
  std::string diagnostic;
};

struct CycleSpectrum {
  int t_min = 3;
  int t_max = 3;
  std::optional<Vertex> anchor;
  /// Ascending in t; every length of [t_min, t_max] unless a subset was asked for.
  std::vector<LengthVerdict> verdicts;

  const LengthVerdict& at(int t) const {
    auto it = std::lower_bound(verdicts.begin(), verdicts.end(), t,
                               [](const LengthVerdict& lv, int x) { return lv.t < x; });
    if (it == verdicts.end() || it->t != t) throw std::out_of_range("length not in the spectrum");
    return *it;
  }

  std::vector<int> lengths(Verdict v) const {
    std::vector<int> out;
    for (const auto& lv : verdicts)
      if (lv.verdict == v) out.push_back(lv.t);
    return out;
  }

  bool all_found() const { return lengths(Verdict::found).size() == verdicts.size(); }

  /// Smallest length that was not found, if any.
  std::optional<int> first_missing() const {
    for (const auto& lv : verdicts)
      if (lv.verdict != Verdict::found) return lv.t;
    return std::nullopt;
  }
};

inline constexpr int kOracleLimit = 16;
inline constexpr int kOracleHardLimit = 24;

/// Exact set of cycle lengths by dynamic programming over vertex subsets:
/// for each start s (the smallest vertex of the cycle) and each subset S of
/// {s, ..., n-1} containing s, the set of possible ends of a path from s that
/// visits exactly S. A cycle on S exists iff some end is adjacent to s.
/// Guarded to n <= 16; `allow_large` lifts the guard to 24.
inline CycleSpectrum exact_cycle_spectrum_oracle(const Graph& g, std::optional<Vertex> anchor = std::nullopt,
                                                 bool allow_large = false) {
  const int n = g.order();
  const int limit = allow_large ? kOracleHardLimit : kOracleLimit;
  if (n > limit)
    throw std::invalid_argument("exact cycle oracle is limited to n <= " + std::to_string(limit) +
                                " (got " + std::to_string(n) + ")");
  if (n < 3) throw std::invalid_argument("cycle spectrum needs n >= 3");
  if (anchor) require_vertex(g, *anchor);

  CycleSpectrum out;
  out.t_min = 3;
  out.t_max = n;
  out.anchor = anchor;
  for (int t = 3; t <= n; ++t) out.verdicts.push_back({t, Verdict::absent, "oracle", std::nullopt, {}});

  std::vector<std::uint32_t> local_adj;
  std::vector<std::uint32_t> ends;
  for (Vertex s = 0; s < n; ++s) {
    if (anchor && *anchor < s) break;
    const int m = n - s;  // local bit i <-> vertex s + i
    local_adj.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
      for (Vertex w : g.neighbors(s + i))
        if (w >= s) local_adj[i] |= 1u << (w - s);
    const std::uint32_t anchor_bit = anchor ? 1u << (*anchor - s) : 1u;
    ends.assign(std::size_t{1} << m, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << m); mask += 2) {
      std::uint32_t e = ends[mask];
      if (!e) continue;
      const int k = std::popcount(mask);
      if (k >= 3 && (e & local_adj[0]) && (mask & anchor_bit)) {
        auto& lv = out.verdicts[static_cast<std::size_t>(k - 3)];
        if (!lv.witness) {
          // walk back from an end adjacent to s
          std::vector<Vertex> rev;
          std::uint32_t cur_mask = mask;
          int cur = std::countr_zero(e & local_adj[0]);
          while (true) {
            rev.push_back(s + cur);
            if (cur == 0) break;
            const std::uint32_t prev = cur_mask ^ (1u << cur);
            const std::uint32_t options = ends[prev] & local_adj[cur];
            cur = std::countr_zero(options);
            cur_mask = prev;
          }
          lv.verdict = Verdict::found;
          lv.witness = CycleWitness{std::vector<Vertex>(rev.rbegin(), rev.rend())};
          check_cycle_witness(g, *lv.witness, k, anchor, "oracle");
        }
      }
      while (e) {
        const int end = std::countr_zero(e);
        e &= e - 1;
        std::uint32_t next = local_adj[end] & ~mask;
        while (next) {
          const int w = std::countr_zero(next);
          next &= next - 1;
          ends[mask | (1u << w)] |= 1u << w;
        }
      }
    }
  }
  return out;
}

}  // namespace resilab
