#include <gtest/gtest.h>

#include <cmath>

#include "resilab/adversary.hpp"
#include "resilab/expansion.hpp"
#include "resilab/families.hpp"
#include "resilab/generators.hpp"

using namespace resilab;

TEST(Expansion, PaleyRatioAtLeastTwo) {
  Graph g = gen_paley(101);
  auto small = expansion_ratio(g, {1, 2}, ExpansionMode::exhaustive());
  auto large = expansion_ratio(g, {3, 5}, ExpansionMode::sampled(3000, 1));
  auto all = merge(small, large);
  EXPECT_GE(all.min_ratio, 2.0);
  EXPECT_EQ(all.doubling_violations, 0u);
  EXPECT_EQ(small.sets_checked, 101u + 101u * 100u / 2u);
}

TEST(Expansion, CycleExpandsPoorly) {
  Graph c = families::cycle(12);
  auto r = expansion_ratio(c, {1, 3}, ExpansionMode::exhaustive(), 3);
  // an arc of 3 vertices has exactly 2 outside neighbours
  EXPECT_NEAR(r.min_ratio, 2.0 / 3.0, 1e-12);
  EXPECT_FALSE(r.posa_hypothesis_holds());
  EXPECT_EQ(r.witness.size(), 3u);
}

TEST(Expansion, SampledMinimumNeverBelowExhaustive) {
  Graph g = gen_gnp({30, 0.2, 2});
  auto exact = expansion_ratio(g, {1, 3}, ExpansionMode::exhaustive());
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto sampled = expansion_ratio(g, {1, 3}, ExpansionMode::sampled(200, seed));
    EXPECT_GE(sampled.min_ratio, exact.min_ratio - 1e-12);
  }
}

TEST(Expansion, EnumerationGuard) {
  Graph g = gen_gnp({200, 0.1, 1});
  EXPECT_THROW(expansion_ratio(g, {1, 4}, ExpansionMode::exhaustive()), std::invalid_argument);
  EXPECT_THROW(expansion_ratio(g, {3, 2}, ExpansionMode::exhaustive()), std::invalid_argument);
}

TEST(Layers, PartitionTheBall) {
  Graph g = gen_gnp({300, 0.03, 5});
  auto ls = grow_layers(g, 0, 4);
  ASSERT_EQ(ls.depth(), 4);
  auto dist = bfs_distances(g, 0);
  for (int i = 0; i <= 4; ++i)
    for (Vertex w : ls.layers[i]) EXPECT_EQ(dist[w], i);
  std::size_t ball = 0;
  for (Vertex w = 0; w < g.order(); ++w) ball += dist[w] >= 0 && dist[w] <= 4;
  std::size_t total = 0;
  for (auto s : ls.sizes()) total += s;
  EXPECT_EQ(total, ball);
}

TEST(Layers, FirstLayerAfterRandomDeletions) {
  Graph g = gen_gnp({1000, 0.08, 3});
  DeletionPlan plan = random_capped_adversary(g, 0.3, 4);
  Graph h = plan.residual(g);
  const double np_prime = 1000 * 0.08 * 0.7;
  for (Vertex v : {0, 100, 500}) {
    auto ls = grow_layers(h, v, 2);
    EXPECT_GE(ls.layers[1].size(), 0.5 * np_prime);
    EXPECT_LE(ls.layers[1].size(), 1.1 * 1000 * 0.08);
  }
}

TEST(Codegree, SparseRandomGraphPasses) {
  Graph g = gen_gnp({2000, 0.02, 1});
  auto v = codegree_check(g, 0, 3);
  EXPECT_TRUE(v.pass) << "max codegree " << v.max_codegree;
  EXPECT_NEAR(v.threshold, std::log(2000.0), 1e-12);
}

TEST(Codegree, ThresholdIsMonotone) {
  Graph g = gen_gnp({500, 0.06, 2});
  bool previous = false;
  for (double thr = 0; thr <= 20; thr += 1) {
    auto v = codegree_check(g, 3, 3, thr);
    if (previous) EXPECT_TRUE(v.pass);
    previous = v.pass;
  }
  EXPECT_TRUE(previous);
}

TEST(Codegree, DenseGraphFails) {
  auto v = codegree_check(families::complete(30), 0, 3);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.max_codegree, 28u);  // w in N(0) sees the other 28
}

TEST(TwinLayers, CompleteGraphStopsAtFirstLayer) {
  Graph k = families::complete(50);
  auto cert = certify_ndl(k);
  auto ts = grow_twin_layers(k, 0, cert, 0.1, 5);
  EXPECT_EQ(ts.l, 1);
  EXPECT_EQ(ts.x_layers[1].size(), 12u);
  EXPECT_EQ(ts.y_layers[1].size(), 12u);
  EXPECT_EQ(twin_layer_violation(k, ts), "");
}

TEST(TwinLayers, InvariantsOnDeletedRegularGraph) {
  Graph g = gen_random_regular({2000, 8, 1});
  auto cert = certify_ndl(g);
  DeletionPlan plan = random_capped_adversary(g, 0.25, 2);
  Graph h = plan.residual(g);
  auto ts = grow_twin_layers(h, 0, cert, 0.2, 9);
  EXPECT_EQ(twin_layer_violation(h, ts), "");
  const bool stopped = static_cast<double>(ts.x_layers.back().size()) >= ts.stop_threshold;
  EXPECT_TRUE(stopped || (!ts.capped.empty() && ts.capped.back()));
  for (std::size_t i = 2; i < ts.x_layers.size(); ++i) EXPECT_LE(ts.x_layers[i].size(), ts.cap_size);
  for (std::size_t i = 0; i < ts.growth_ratios.size(); ++i)
    if (!ts.capped[i]) EXPECT_GE(ts.growth_ratios[i], 1.0);
}

TEST(TwinLayers, PreconditionAndDepthFailure) {
  Graph c = families::cycle(40);
  auto cert = certify_ndl(c);
  EXPECT_THROW(grow_twin_layers(c, 0, cert, 0.6, 5), std::invalid_argument);
  // 2-regular: the layers stay at size one, far below the stop threshold
  try {
    grow_twin_layers(c, 0, cert, 0.1, 7);
    FAIL() << "expected a structural error";
  } catch (const StructuralError& e) {
    EXPECT_GE(e.achieved_depth(), 1);
  }
}

TEST(HalfSpread, LayerOfRandomGraphCoversMostVertices) {
  Graph g = gen_gnp({1000, 0.1, 6});
  Graph h = random_capped_adversary(g, 0.3, 1).residual(g);
  auto ls = grow_layers(h, 0, 1);
  ASSERT_GE(ls.layers[1].size(), 1000 * 0.1 / 8);
  auto verdict = large_set_halfspread_check(h, ls.layers[1], 0.1);
  EXPECT_TRUE(verdict.pass);
  EXPECT_NEAR(verdict.required, 550.0, 1e-9);
  EXPECT_THROW(large_set_halfspread_check(h, VertexSet{}, 0.1), std::invalid_argument);
}
