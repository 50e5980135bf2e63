#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "resilab/adversary.hpp"
#include "resilab/cycles/fixed_length.hpp"
#include "resilab/cycles/long.hpp"
#include "resilab/cycles/medium.hpp"
#include "resilab/cycles/oracle.hpp"
#include "resilab/cycles/rotation.hpp"
#include "resilab/cycles/spectrum.hpp"
#include "resilab/families.hpp"
#include "resilab/generators.hpp"

using namespace resilab;

namespace {

std::set<int> found_set(const CycleSpectrum& s) {
  auto v = s.lengths(Verdict::found);
  return {v.begin(), v.end()};
}

std::set<int> absent_set(const CycleSpectrum& s) {
  auto v = s.lengths(Verdict::absent);
  return {v.begin(), v.end()};
}

}  // namespace

TEST(ExactFinders, TriangleAndFourCycleMatchOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_gnp({9, 0.25, seed});
    auto lengths = oracle::cycle_lengths(g);
    auto tri = find_triangle(g);
    EXPECT_EQ(tri.has_value(), lengths.count(3) == 1);
    if (tri) EXPECT_TRUE(is_valid_cycle(g, *tri));
    auto quad = find_four_cycle(g);
    EXPECT_EQ(quad.has_value(), lengths.count(4) == 1);
    if (quad) EXPECT_TRUE(is_valid_cycle(g, *quad) && quad->size() == 4);
    for (Vertex a = 0; a < 9; a += 4) {
      auto anchored = oracle::cycle_lengths(g, a);
      EXPECT_EQ(find_triangle(g, a).has_value(), anchored.count(3) == 1);
      EXPECT_EQ(find_four_cycle(g, a).has_value(), anchored.count(4) == 1);
    }
  }
}

TEST(Oracle, SmallFamilies) {
  EXPECT_EQ(found_set(exact_cycle_spectrum_oracle(families::complete(4))), (std::set<int>{3, 4}));
  EXPECT_EQ(found_set(exact_cycle_spectrum_oracle(families::cycle(6))), (std::set<int>{6}));
  auto p = exact_cycle_spectrum_oracle(families::petersen());
  EXPECT_EQ(found_set(p), (std::set<int>{5, 6, 8, 9}));
  EXPECT_EQ(absent_set(p), (std::set<int>{3, 4, 7, 10}));
}

TEST(Oracle, AgreesWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 6 + static_cast<int>(seed % 6);
    Graph g = gen_gnp({n, 0.2 + 0.1 * static_cast<double>(seed % 7), seed});
    EXPECT_EQ(found_set(exact_cycle_spectrum_oracle(g)), oracle::cycle_lengths(g)) << "seed " << seed;
    EXPECT_EQ(found_set(exact_cycle_spectrum_oracle(g, 2)), oracle::cycle_lengths(g, 2)) << "seed " << seed;
  }
}

TEST(Oracle, SizeGuard) {
  Graph g = gen_gnp({20, 0.3, 1});
  EXPECT_THROW(exact_cycle_spectrum_oracle(g), std::invalid_argument);
  EXPECT_NO_THROW(exact_cycle_spectrum_oracle(g, std::nullopt, true));
}

TEST(FixedLength, PetersenAndCompleteGraph) {
  auto budget = SearchBudget::thorough();
  Graph p = families::petersen();
  EXPECT_EQ(find_cycle_fixed_length(p, 5, budget, 1).verdict, Verdict::found);
  EXPECT_EQ(find_cycle_fixed_length(p, 7, budget, 1).verdict, Verdict::absent);
  EXPECT_EQ(find_cycle_fixed_length(families::complete(4), 3, budget, 1).verdict, Verdict::found);
  EXPECT_THROW(find_cycle_fixed_length(p, 2, budget, 1), std::invalid_argument);
  EXPECT_THROW(find_cycle_fixed_length(p, 11, budget, 1), std::invalid_argument);
}

TEST(FixedLength, ParityCertificate) {
  Graph g = families::complete_bipartite(30, 30);
  auto r = find_cycle_fixed_length(g, 9, SearchBudget::fast(), 1);
  EXPECT_EQ(r.verdict, Verdict::absent);
  EXPECT_EQ(find_cycle_fixed_length(g, 10, SearchBudget::fast(), 1).verdict, Verdict::found);
}

TEST(FixedLength, EachRouteProducesValidWitnesses) {
  Graph g = gen_gnp({150, 0.06, 2});
  auto budget = SearchBudget::thorough();
  FixedLengthRoutes walks_only{false, false, false, true, false};
  FixedLengthRoutes colour_only{false, false, false, false, true};
  for (int t : {5, 7, 9}) {
    for (const auto& routes : {walks_only, colour_only}) {
      auto r = find_cycle_fixed_length(g, t, budget, 3, std::nullopt, routes);
      ASSERT_EQ(r.verdict, Verdict::found) << "t=" << t << " via " << r.method;
      EXPECT_EQ(r.witness->length(), t);
      EXPECT_TRUE(is_valid_cycle(g, *r.witness));
    }
    auto anchored = find_cycle_fixed_length(g, t, budget, 3, Vertex{10});
    ASSERT_TRUE(anchored.found());
    EXPECT_TRUE(anchored.witness->contains(10));
  }
}

TEST(FixedLength, UnknownIsNotAbsence) {
  // C_20 has no 5-cycle, but with the parity route off nothing can prove it
  Graph g = families::cycle(20);
  SearchBudget tiny = SearchBudget::fast();
  tiny.max_walks = 1;
  FixedLengthRoutes walks_only{false, false, false, true, false};
  EXPECT_EQ(find_cycle_fixed_length(g, 5, tiny, 1, std::nullopt, walks_only).verdict, Verdict::unknown);
}

TEST(Rotation, LongPathFromPathAndCompleteGraph) {
  auto budget = SearchBudget::thorough();
  auto p = posa_long_path(families::path(4), 0, budget, 1);
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  auto k = posa_long_path(families::complete(6), 2, budget, 1);
  EXPECT_EQ(k.vertices.size(), 6u);
  EXPECT_EQ(k.vertices.front(), 2);
}

TEST(Rotation, LongPathsInRandomGraphs) {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_gnp({200, 0.2, seed});
    auto path = posa_long_path(g, 0, SearchBudget::thorough(), seed);
    EXPECT_EQ(path.vertices.front(), 0);
    EXPECT_TRUE(is_valid_path(g, path));
    good += path.vertices.size() >= 180;
  }
  EXPECT_GE(good, 9);
}

TEST(Rotation, HamiltonCycles) {
  auto budget = SearchBudget::thorough();
  auto k5 = posa_hamilton_cycle(families::complete(5), budget, 1);
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->length(), 5);
  EXPECT_FALSE(posa_hamilton_cycle(families::petersen(), budget, 1));
  EXPECT_FALSE(posa_hamilton_cycle(families::star(5), budget, 1));
  int found = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_gnp({300, 0.15, seed});
    auto c = posa_hamilton_cycle(g, budget, seed);
    if (c) {
      EXPECT_EQ(c->length(), 300);
      EXPECT_TRUE(is_valid_cycle(g, *c));
      ++found;
    }
  }
  EXPECT_GE(found, 9);
}

TEST(Rotation, FixedEndpointPaths) {
  auto budget = SearchBudget::thorough();
  auto p = fixed_endpoints_path(families::path(4), 0, 3, 3, budget, 1);
  ASSERT_EQ(p.verdict, Verdict::found);
  EXPECT_EQ(p.witness->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  auto k = fixed_endpoints_path(families::complete(5), 0, 1, 4, budget, 1);
  ASSERT_EQ(k.verdict, Verdict::found);
  EXPECT_EQ(k.witness->vertices.front(), 0);
  EXPECT_EQ(k.witness->vertices.back(), 1);
  EXPECT_EQ(k.witness->length(), 4);
  EXPECT_EQ(fixed_endpoints_path(families::path(4), 0, 3, 2, budget, 1).verdict, Verdict::absent);
  EXPECT_THROW(fixed_endpoints_path(families::path(4), 1, 1, 2, budget, 1), std::invalid_argument);

  int found = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_gnp({300, 0.2, seed});
    Rng rng(seed);
    const Vertex u = rng.index(300);
    Vertex v = rng.index(300);
    if (v == u) v = (u + 1) % 300;
    auto r = fixed_endpoints_path(g, u, v, 299, budget, seed);
    if (r.verdict == Verdict::found) {
      EXPECT_EQ(r.witness->vertices.front(), u);
      EXPECT_EQ(r.witness->vertices.back(), v);
      EXPECT_EQ(r.witness->length(), 299);
      ++found;
    }
  }
  EXPECT_GE(found, 8);
}

TEST(Medium, CompleteGraph) {
  auto r = proof_guided_medium_cycle(families::complete(20), 0, 5, 2, SearchBudget::thorough(), 1);
  ASSERT_TRUE(r.witness) << r.stage << ": " << r.diagnostic;
  EXPECT_EQ(r.witness->length(), 5);
  EXPECT_TRUE(r.witness->contains(0));
}

TEST(Medium, ArgumentErrors) {
  Graph g = families::complete(20);
  EXPECT_THROW(proof_guided_medium_cycle(g, 0, 2, 2, SearchBudget::fast(), 1), std::invalid_argument);
  EXPECT_THROW(proof_guided_medium_cycle(g, 0, 4, 3, SearchBudget::fast(), 1), std::invalid_argument);
}

TEST(Medium, DeeperLayersOnSparserGraph) {
  // np = 30: layer 1 is too thin for a dense core, layer 2 is not
  Graph g = gen_gnp({1500, 0.02, 3});
  Graph h = random_capped_adversary(g, 0.2, 1).residual(g);
  int found = 0;
  for (int t : {9, 15, 30}) {
    auto r = proof_guided_medium_cycle(h, 0, t, 3, SearchBudget::thorough(), static_cast<std::uint64_t>(t));
    if (r.witness) {
      EXPECT_EQ(r.witness->length(), t);
      EXPECT_TRUE(r.witness->contains(0));
      ++found;
    }
  }
  EXPECT_EQ(found, 3);
}

TEST(Long, CompleteGraphSubsets) {
  auto r = long_cycle_via_subset(families::complete(10), 7, SearchBudget::thorough(), 1);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->length(), 7);
  auto all = long_cycle_via_subset(families::complete(10), 10, SearchBudget::thorough(), 1, Vertex{3});
  ASSERT_TRUE(all.found());
  EXPECT_TRUE(all.witness->contains(3));
}

TEST(Long, BipartiteResidualHasOnlyEvenCycles) {
  Graph g = gen_gnp({600, 0.15, 1});
  DeletionPlan plan = bipartition_adversary(g, 600, 1);
  Graph h = plan.residual(g);
  ASSERT_TRUE(is_bipartite(h));
  for (int t : {120, 300, 600}) {
    auto r = long_cycle_via_subset(h, t, SearchBudget::thorough(), static_cast<std::uint64_t>(t));
    EXPECT_TRUE(r.found()) << t;
  }
  EXPECT_FALSE(long_cycle_via_subset(h, 301, SearchBudget::fast(), 1).found());
}

TEST(Long, ChordSplitsHostCycle) {
  // C_8 plus chord 0-4 gives two 5-cycles
  Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}, {0, 4}});
  CycleWitness host{{0, 1, 2, 3, 4, 5, 6, 7}};
  auto r = cycle_via_chord(g, host, 5);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_valid_cycle(g, *r.witness));
  EXPECT_FALSE(cycle_via_chord(g, host, 6).found());
}

TEST(Spectrum, SmallFamilies) {
  SpectrumOptions opts;
  EXPECT_TRUE(cycle_spectrum(families::complete(6), opts).all_found());
  auto c7 = cycle_spectrum(families::cycle(7), opts);
  EXPECT_EQ(found_set(c7), (std::set<int>{7}));
  EXPECT_EQ(absent_set(c7), (std::set<int>{3, 4, 5, 6}));
  auto p = cycle_spectrum(families::petersen(), opts);
  EXPECT_EQ(found_set(p), (std::set<int>{5, 6, 8, 9}));
  EXPECT_EQ(absent_set(p), (std::set<int>{3, 4, 7, 10}));
}

TEST(Spectrum, NeverContradictsOracleAndAnchoredIsSubset) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);
    Graph g = gen_gnp({n, 0.25 + 0.05 * static_cast<double>(seed % 9), seed});
    SpectrumOptions opts;
    opts.seed = seed;
    auto heuristic = cycle_spectrum(g, opts);
    auto exact = exact_cycle_spectrum_oracle(g);
    for (const auto& lv : heuristic.verdicts) {
      const auto& truth = exact.at(lv.t);
      if (lv.verdict == Verdict::found) EXPECT_EQ(truth.verdict, Verdict::found);
      if (lv.verdict == Verdict::absent) EXPECT_EQ(truth.verdict, Verdict::absent);
    }
    opts.anchor = 0;
    auto anchored = cycle_spectrum(g, opts);
    for (const auto& lv : anchored.verdicts)
      if (lv.verdict == Verdict::found) {
        EXPECT_EQ(heuristic.at(lv.t).verdict, Verdict::found);
        EXPECT_TRUE(lv.witness->contains(0));
      }
  }
}

TEST(Spectrum, SubsetOfLengthsAndRangeErrors) {
  Graph g = gen_gnp({100, 0.2, 4});
  SpectrumOptions opts;
  opts.only = {3, 50, 100};
  opts.budget = SearchBudget::fast();
  auto s = cycle_spectrum(g, opts);
  ASSERT_EQ(s.verdicts.size(), 3u);
  EXPECT_TRUE(s.all_found());
  opts.t_min = 2;
  EXPECT_THROW(cycle_spectrum(g, opts), std::invalid_argument);
  opts.t_min = 3;
  opts.t_max = 101;
  EXPECT_THROW(cycle_spectrum(g, opts), std::invalid_argument);
  EXPECT_THROW(parse_strategy("greedy"), std::invalid_argument);
}

TEST(Spectrum, FullRangeOnResidualRandomGraph) {
  Graph g = gen_gnp({400, 0.12, 2});
  Graph h = random_capped_adversary(g, 0.3, 2).residual(g);
  SpectrumOptions opts;
  opts.budget = SearchBudget::fast();
  opts.seed = 5;
  auto s = cycle_spectrum(h, opts);
  EXPECT_TRUE(s.all_found()) << "first missing " << s.first_missing().value_or(-1);
  for (const auto& lv : s.verdicts)
    if (lv.witness) EXPECT_TRUE(is_valid_cycle(h, *lv.witness));
}

TEST(Spectrum, DeterministicForFixedSeed) {
  Graph g = gen_gnp({200, 0.1, 8});
  SpectrumOptions opts;
  opts.budget = SearchBudget::fast();
  opts.seed = 3;
  auto a = cycle_spectrum(g, opts);
  auto b = cycle_spectrum(g, opts);
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].verdict, b.verdicts[i].verdict);
    EXPECT_EQ(a.verdicts[i].method, b.verdicts[i].method);
    if (a.verdicts[i].witness) EXPECT_EQ(a.verdicts[i].witness->vertices, b.verdicts[i].witness->vertices);
  }
}
