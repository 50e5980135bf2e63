#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace resilab {

/// SplitMix64 finalizer; used only to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_tag(std::string_view tag) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for the consumer named `tag` (optionally indexed) under `base`.
/// Adding a new tag never changes the seeds of existing ones.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                    std::uint64_t index = 0) noexcept {
  return mix64(mix64(base ^ hash_tag(tag)) + 0x632be59bd9b4e019ULL * (index + 1));
}

/// Deterministic 64-bit stream on top of std::mt19937_64 (whose output
/// sequence is fixed by the standard). Conversions to doubles and bounded
/// integers are done here rather than through <random> distributions,
/// which are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream; does not advance this one.
  Rng split(std::string_view tag, std::uint64_t index = 0) const {
    return Rng(derive_seed(seed_, tag, index));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class Index>
  Index index(Index size) {
    return static_cast<Index>(below(static_cast<std::uint64_t>(size)));
  }

  bool bernoulli(double p) { return uniform() < p; }

  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      const auto j = static_cast<decltype(i)>(below(static_cast<std::uint64_t>(i) + 1));
      using std::swap;
      swap(first[i], first[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace resilab
