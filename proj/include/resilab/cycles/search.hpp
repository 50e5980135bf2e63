#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resilab/graph.hpp"

namespace resilab {

/// Work limits shared by the path and cycle searches. Zero in a count field
/// means "derive from the instance".
struct SearchBudget {
  /// Rotations per restart; 0 means rotation_factor * n.
  long long max_rotations = 0;
  int rotation_factor = 50;
  int max_restarts = 20;
  /// Colour-coding rounds; 0 means ceil(e^t ln 100), capped at 1e6.
  long long max_colorings = 0;
  /// Random walk-closure attempts for fixed-length search.
  long long max_walks = 20000;
  /// Random vertex subsets tried for long cycles.
  int subset_attempts = 10;
  /// Wall-clock cap per search call in seconds; 0 disables it. Hitting the
  /// cap makes a result machine dependent, so reports mention it.
  double time_cap_seconds = 0.0;

  static SearchBudget thorough() { return {}; }

  static SearchBudget fast() {
    SearchBudget b;
    b.rotation_factor = 10;
    b.max_restarts = 4;
    b.max_colorings = 200;
    b.max_walks = 2000;
    b.subset_attempts = 3;
    return b;
  }

  static SearchBudget named(const std::string& name) {
    if (name == "thorough") return thorough();
    if (name == "fast") return fast();
    throw std::invalid_argument("unknown budget profile '" + name + "' (expected fast|thorough)");
  }

  long long rotations_for(int n) const {
    return max_rotations > 0 ? max_rotations : static_cast<long long>(rotation_factor) * std::max(1, n);
  }

  long long colorings_for(int t) const {
    if (max_colorings > 0) return max_colorings;
    const double rounds = std::ceil(std::exp(static_cast<double>(t)) * std::log(100.0));
    return static_cast<long long>(std::min(rounds, 1e6));
  }
};

/// Optional wall-clock limit.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(std::max(0.0, seconds)))) {}

  bool expired() const { return active_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

enum class Verdict { found, absent, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::absent: return "absent-certified";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

struct CycleSearchResult {
  Verdict verdict = Verdict::unknown;
  std::optional<CycleWitness> witness;
  std::string method;
  std::string diagnostic;

  bool found() const { return verdict == Verdict::found; }

  static CycleSearchResult hit(std::vector<Vertex> cycle, std::string method) {
    return {Verdict::found, CycleWitness{std::move(cycle)}, std::move(method), {}};
  }
  static CycleSearchResult absent(std::string method, std::string why = {}) {
    return {Verdict::absent, std::nullopt, std::move(method), std::move(why)};
  }
  static CycleSearchResult miss(std::string method, std::string why = {}) {
    return {Verdict::unknown, std::nullopt, std::move(method), std::move(why)};
  }
};

/// Every witness leaving the library passes through here. A failure is a
/// bug in a search routine, not a property of the input.
inline void check_cycle_witness(const Graph& g, const CycleWitness& c, int t,
                                std::optional<Vertex> anchor, const std::string& method) {
  if (c.length() != t || !is_valid_cycle(g, c) || (anchor && !c.contains(*anchor)))
    throw std::logic_error(method + " produced an invalid cycle witness of length " +
                           std::to_string(c.length()) + " (expected " + std::to_string(t) + ")");
}

inline void check_path_witness(const Graph& g, const PathWitness& p, const std::string& method) {
  if (!is_valid_path(g, p)) throw std::logic_error(method + " produced an invalid path witness");
}

}  // namespace resilab
