#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "resilab/experiments.hpp"
#include "resilab/families.hpp"

using namespace resilab;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.generator = {"gnp", 60, 0.3, 0, 0};
  c.adversary = {"random-capped", 3, 5};
  c.grid = {0.1, 0.3};
  c.trials = 4;
  c.base_seed = 11;
  c.workers = 1;
  return c;
}

}  // namespace

TEST(Config, JsonRoundTrip) {
  ExperimentConfig c = small_config();
  c.parity = "odd";
  c.t_max = 40;
  ExperimentConfig back = config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Config, Validation) {
  ExperimentConfig c = small_config();
  c.grid.clear();
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = small_config();
  c.grid = {1.2};
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = small_config();
  c.parity = "prime";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = small_config();
  c.budget_profile = "slow";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = small_config();
  c.bisection = std::pair{0.1, 0.9};
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Wilson, KnownValues) {
  auto [lo, hi] = wilson_interval(10, 10);
  EXPECT_NEAR(hi, 1.0, 1e-12);
  EXPECT_NEAR(lo, 0.7225, 1e-3);
  auto [lo0, hi0] = wilson_interval(0, 10);
  EXPECT_NEAR(lo0, 0.0, 1e-12);
  EXPECT_NEAR(hi0, 0.2775, 1e-3);
}

TEST(Probe, CsvHasOneRowPerGridPoint) {
  ResilienceReport r = resilience_probe(small_config());
  ASSERT_EQ(r.points.size(), 2u);
  std::istringstream csv(to_csv(r));
  std::string line;
  int rows = -1;  // header
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  EXPECT_EQ(rows, 2);
  EXPECT_EQ(r.points[0].successes, 4);
  EXPECT_FALSE(r.contradiction);
}

TEST(Probe, CompleteGraphBipartitionKillsOddCycles) {
  ExperimentConfig c;
  c.generator = {"complete", 12, 1.0, 0, 0};
  c.adversary = {"bipartition", 3, 5};
  c.budget_base = "d";
  c.grid = {0.1, 0.6};
  c.trials = 3;
  c.strategy = "oracle";
  c.workers = 1;
  ResilienceReport r = resilience_probe(c);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_EQ(r.points[0].frequency, 1.0);
  EXPECT_EQ(r.points[1].frequency, 0.0);
  EXPECT_EQ(r.points[1].failure_mode, 3);
  EXPECT_FALSE(r.contradiction);
}

TEST(Probe, ReplayIsDeterministicAcrossWorkerCounts) {
  ExperimentConfig c = small_config();
  c.adversary.kind = "bipartition";
  c.parity = "odd";
  ResilienceReport a = resilience_probe(c);
  c.workers = 3;
  ResilienceReport b = resilience_probe(c);
  EXPECT_TRUE(same_outcomes(a, b));
  ResilienceReport again = replay(to_json(a));
  EXPECT_TRUE(same_outcomes(a, again));
}

TEST(Probe, CoupledPlansAreMonotone) {
  ExperimentConfig c = small_config();
  c.adversary.kind = "bipartition";
  c.grid = {0.1, 0.3, 0.5, 0.7};
  c.coupled = true;
  c.parity = "odd";
  ResilienceReport r = resilience_probe(c);
  ASSERT_EQ(r.points.size(), 4u);
  for (std::size_t k = 1; k < r.points.size(); ++k) EXPECT_GT(r.points[k].budget, r.points[k - 1].budget);
  for (int trial = 0; trial < c.trials; ++trial)
    for (std::size_t k = 1; k < r.points.size(); ++k) {
      EXPECT_GE(r.points[k].trials[trial].deleted_edges, r.points[k - 1].trials[trial].deleted_edges);
      if (r.points[k].trials[trial].success) EXPECT_TRUE(r.points[k - 1].trials[trial].success);
    }
}

TEST(Probe, BisectionBracketsTheCrossing) {
  ExperimentConfig c = small_config();
  c.generator = {"complete", 10, 1.0, 0, 0};
  c.adversary.kind = "bipartition";
  c.budget_base = "d";
  c.grid.clear();
  c.bisection = std::pair{0.0, 0.9};
  c.strategy = "oracle";
  c.parity = "odd";
  c.trials = 2;
  ResilienceReport r = resilience_probe(c);
  ASSERT_TRUE(r.c_star);
  EXPECT_LT(r.c_star_hi - r.c_star_lo, kBisectionWidth);
  // K_10: within-part degree 4 of 9, so budgets >= 4 kill all odd cycles
  EXPECT_NEAR(*r.c_star, 4.0 / 9.0, 0.05);
  EXPECT_TRUE(fully_certified(r));
  EXPECT_EQ(to_json(r)["c_star"]["kind"], "exact");
}

TEST(Probe, UnknownLengthsMakeTheThresholdALowerBound) {
  ResilienceReport r;
  r.points.resize(1);
  r.points[0].trials.resize(2);
  EXPECT_TRUE(fully_certified(r));
  r.points[0].trials[1].unknown = 1;
  EXPECT_FALSE(fully_certified(r));
  r.points[0].trials[1].error = "budget exhausted";
  EXPECT_TRUE(fully_certified(r));
}

TEST(Report, EmitWritesBothFiles) {
  ExperimentConfig c = small_config();
  c.trials = 2;
  ResilienceReport r = resilience_probe(c);
  auto dir = std::filesystem::temp_directory_path() / "resilab_emit_test";
  std::filesystem::remove_all(dir);
  emit_report(r, dir.string());
  EXPECT_TRUE(std::filesystem::exists(dir / c.csv_path));
  std::ifstream in(dir / c.json_path);
  json j = json::parse(in);
  EXPECT_EQ(j.at("points").size(), 2u);
  EXPECT_TRUE(same_outcomes(r, replay(j)));
  std::filesystem::remove_all(dir);
}

TEST(TriangleDemo, TrivialAndSparse) {
  auto empty = tightness_demo_triangles(50, 0.0, {1, 2});
  EXPECT_EQ(empty.complete_count(), 2);
  for (const auto& row : empty.rows) EXPECT_EQ(row.deleted_edges, 0u);
  auto sparse = tightness_demo_triangles(400, 0.03, {1, 2, 3});
  EXPECT_GE(sparse.complete_count(), 2);
  for (const auto& row : sparse.rows) EXPECT_LE(row.max_fraction, 0.25);
}

TEST(TriangleDemo, CountsTrianglesPerVertex) {
  // G(8, 1) is K_8: each vertex lies in C(7, 2) triangles
  auto k8 = tightness_demo_triangles(8, 1.0, {1});
  EXPECT_EQ(k8.rows[0].max_vertex_triangles, 21u);
  EXPECT_DOUBLE_EQ(k8.rows[0].triangle_scale, 64.0);
}

TEST(Bondy, HypothesisAndObligations) {
  auto k6 = bondy_check(families::complete(6));
  EXPECT_TRUE(k6.dirac_hypothesis);
  EXPECT_TRUE(k6.ok());
  ASSERT_TRUE(k6.spectrum);
  EXPECT_TRUE(k6.spectrum->all_found());
  auto c8 = bondy_check(families::cycle(8));
  EXPECT_FALSE(c8.dirac_hypothesis);
  EXPECT_TRUE(c8.even_obligations.empty());
  EXPECT_FALSE(c8.spectrum);
}

TEST(Bondy, DenseRandomGraph) {
  Graph g = gen_gnp({30, 0.9, 3});
  ASSERT_GT(g.min_degree(), 15);
  auto r = bondy_check(g, SearchBudget::thorough(), 1);
  EXPECT_TRUE(r.dirac_hypothesis);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.spectrum->all_found());
}

TEST(Bondy, SmallGraphsAgreeWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 7 + static_cast<int>(seed % 8);
    Graph g = gen_gnp({n, 0.75, seed});
    auto r = bondy_check(g);
    if (!r.dirac_hypothesis) continue;
    EXPECT_TRUE(r.ok());
    if (n <= 10) {
      auto lengths = oracle::cycle_lengths(g);
      EXPECT_EQ(static_cast<int>(lengths.size()), n - 2);
    }
  }
}
