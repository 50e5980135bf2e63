#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/cycles/fixed_length.hpp"
#include "resilab/cycles/long.hpp"
#include "resilab/cycles/medium.hpp"
#include "resilab/cycles/oracle.hpp"
#include "resilab/cycles/search.hpp"
#include "resilab/graph.hpp"
#include "resilab/rng.hpp"

namespace resilab {

enum class SpectrumStrategy { automatic, oracle };

inline SpectrumStrategy parse_strategy(const std::string& name) {
  if (name == "auto") return SpectrumStrategy::automatic;
  if (name == "oracle") return SpectrumStrategy::oracle;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected auto|oracle)");
}

struct SpectrumOptions {
  int t_min = 3;
  /// 0 means n.
  int t_max = 0;
  std::optional<Vertex> anchor;
  /// When non-empty, only these lengths (clipped to the range) are decided.
  std::vector<int> only;
  SpectrumStrategy strategy = SpectrumStrategy::automatic;
  SearchBudget budget = SearchBudget::thorough();
  std::uint64_t seed = 0;
  /// Layer depth used by the medium-length construction.
  int l = 2;
  /// Lengths up to this use the fixed-length finder; 0 means max(12, 2l-2).
  int short_max = 0;
  /// Lengths up to medium_fraction * n use the medium construction.
  double medium_fraction = 0.05;
  /// Origins tried by the medium construction when no anchor is given.
  int medium_origins = 3;
};

/// Verdict for every length in [t_min, t_max]. Dispatch by length band:
/// short lengths go to the fixed-length finder, medium ones to the layered
/// construction, long ones to Hamilton cycles of random subsets; the chord
/// shortcut on one long host cycle and the fixed-length finder back up the
/// medium and long bands. Graphs on at most 16 vertices are decided exactly.
inline CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& options = {}) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("cycle spectrum needs n >= 3");
  const int t_max = options.t_max == 0 ? n : options.t_max;
  if (options.t_min < 3 || t_max > n || options.t_min > t_max)
    throw std::invalid_argument("cycle length range must satisfy 3 <= t_min <= t_max <= n");
  if (options.anchor) require_vertex(g, *options.anchor);

  CycleSpectrum out;
  out.t_min = options.t_min;
  out.t_max = t_max;
  out.anchor = options.anchor;

  std::vector<int> lengths;
  for (int t = options.t_min; t <= t_max; ++t)
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), t) != options.only.end())
      lengths.push_back(t);

  if (options.strategy == SpectrumStrategy::oracle) {
    CycleSpectrum full = exact_cycle_spectrum_oracle(g, options.anchor);
    for (int t : lengths) out.verdicts.push_back(full.at(t));
    return out;
  }

  const int short_max = options.short_max > 0 ? options.short_max : std::max(12, 2 * options.l - 2);
  const int medium_max = static_cast<int>(options.medium_fraction * n);
  const bool bipartite = is_bipartite(g);
  std::optional<std::optional<CycleWitness>> host;  // computed on first use
  auto host_cycle = [&]() -> const std::optional<CycleWitness>& {
    if (!host) host = long_cycle_heuristic(g, options.budget, derive_seed(options.seed, "host"));
    return *host;
  };
  std::vector<Vertex> origins;
  if (options.anchor) {
    origins.push_back(*options.anchor);
  } else {
    Rng rng(derive_seed(options.seed, "medium-origins"));
    for (int i = 0; i < std::max(1, options.medium_origins); ++i) origins.push_back(rng.index(n));
  }

  for (int t : lengths) {
    const std::uint64_t seed = derive_seed(options.seed, "length", static_cast<std::uint64_t>(t));
    LengthVerdict lv{t, Verdict::unknown, {}, std::nullopt, {}};
    std::vector<std::string> tried;
    auto take = [&](CycleSearchResult r) {
      tried.push_back(r.method);
      if (r.verdict == Verdict::unknown) return false;
      lv.verdict = r.verdict;
      lv.method = r.method;
      lv.witness = std::move(r.witness);
      lv.diagnostic = r.diagnostic;
      return true;
    };

    if (bipartite && t % 2 == 1) {
      take(CycleSearchResult::absent("bipartite-parity", "odd cycle in a bipartite graph"));
    } else if (n <= kExhaustiveCycleLimit || t <= short_max) {
      take(find_cycle_fixed_length(g, t, options.budget, seed, options.anchor));
    } else {
      bool done = false;
      if (t <= medium_max && t >= 2 * options.l - 1) {
        for (std::size_t i = 0; i < origins.size() && !done; ++i) {
          MediumCycleResult m = proof_guided_medium_cycle(g, origins[i], t, options.l, options.budget,
                                                          derive_seed(seed, "medium", i));
          if (m.witness) {
            done = take(CycleSearchResult::hit(m.witness->vertices, "medium-construction"));
          } else {
            tried.push_back("medium-construction (" + m.stage + ": " + m.diagnostic + ")");
          }
        }
      } else if (t > medium_max) {
        done = take(long_cycle_via_subset(g, t, options.budget, derive_seed(seed, "subset"), options.anchor));
      }
      if (!done && host_cycle()) done = take(cycle_via_chord(g, *host_cycle(), t, options.anchor));
      if (!done) {
        FixedLengthRoutes routes;
        routes.color_coding = false;  // t exceeds the colour-coding range here
        take(find_cycle_fixed_length(g, t, options.budget, seed, options.anchor, routes));
      }
    }
    if (lv.verdict == Verdict::unknown) {
      lv.method = "none";
      std::string joined;
      for (const auto& m : tried) joined += (joined.empty() ? "" : "; ") + m;
      lv.diagnostic = "budget exhausted after: " + joined;
    }
    out.verdicts.push_back(std::move(lv));
  }
  return out;
}

}  // namespace resilab
