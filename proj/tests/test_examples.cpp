// Small hand-checkable cases for each public operation.

#include <gtest/gtest.h>

#include "resilab/resilab.hpp"

using namespace resilab;

TEST(Examples, Neighborhoods) {
  EXPECT_EQ(kth_neighborhood(families::path(4), 0, 2), (VertexSet{2}));
  EXPECT_EQ(kth_neighborhood(families::cycle(6), 0, 3), (VertexSet{3}));
  EXPECT_EQ(neighbors_of_set(families::complete(4), VertexSet{0}), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(neighbors_of_set(families::empty(4), VertexSet{0, 1}).empty());
  Graph tri = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(neighbors_of_set(tri, VertexSet{0, 1}), (VertexSet{0, 1, 2}));
  EXPECT_THROW(kth_neighborhood(tri, 4, 1), std::invalid_argument);
}

TEST(Examples, EdgeCounts) {
  VertexSet all{0, 1, 2};
  EXPECT_EQ(edge_count_between(families::complete(3), all, all), 6u);
  EXPECT_EQ(edge_count_between(families::path(2), VertexSet{0}, VertexSet{1}), 1u);
}

TEST(Examples, DeleteAndInduce) {
  const Edge matching[] = {{0, 1}, {2, 3}};
  Graph c4 = delete_edges(families::complete(4), matching);
  EXPECT_EQ(c4, Graph::from_edges(4, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}));
  EXPECT_EQ(delete_edges(c4, std::vector<Edge>{}), c4);
  EXPECT_EQ(induced_subgraph(families::complete(5), VertexSet{0, 2, 4}).graph, families::complete(3));
  EXPECT_EQ(induced_subgraph(families::cycle(6), VertexSet{0, 1, 2}).graph, families::path(3));
  EXPECT_EQ(induced_subgraph(families::petersen(), VertexSet{0, 1, 2, 3, 4}).graph, families::cycle(5));
}

TEST(Examples, MinDegreeSubgraph) {
  auto k4 = min_degree_subgraph(families::complete(4), 3);
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->graph, families::complete(4));
  EXPECT_FALSE(min_degree_subgraph(families::star(5), 2));
  Graph pendant = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto core = min_degree_subgraph(pendant, 2);
  ASSERT_TRUE(core);
  EXPECT_EQ(core->to_parent, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Examples, Generators) {
  EXPECT_EQ(gen_gnp({10, 0.0, 1}).edge_count(), 0u);
  EXPECT_EQ(gen_gnp({10, 1.0, 1}), families::complete(10));
  EXPECT_EQ(gen_paley(5), families::cycle(5));
  EXPECT_THROW(gen_paley(9), std::invalid_argument);
  EXPECT_EQ(gen_random_regular({4, 3, 1}), families::complete(4));
  Graph m = gen_random_regular({6, 1, 1});
  EXPECT_EQ(m.edge_count(), 3u);
  EXPECT_TRUE(is_regular(m));
  Graph r = gen_random_regular({100, 10, 5});
  EXPECT_TRUE(is_regular(r));
  EXPECT_EQ(r.max_degree(), 10);
}

TEST(Examples, Spectra) {
  EXPECT_NEAR(second_eigenvalue(families::complete(4)).lambda, 1.0, 1e-9);
  EXPECT_NEAR(second_eigenvalue(families::cycle(6)).lambda, 2.0, 1e-9);
  EXPECT_NEAR(second_eigenvalue(gen_paley(13)).lambda, 2.302776, 1e-6);
  auto k5 = certify_ndl(families::complete(5));
  EXPECT_EQ(k5.d_nominal, 4);
  EXPECT_EQ(k5.eps_prime, 0.0);
  EXPECT_NEAR(k5.lambda, 1.0, 1e-9);
  auto star = certify_ndl(families::star(9));
  EXPECT_EQ(star.d_min, 1);
  EXPECT_EQ(star.d_max, 9);
  EXPECT_EQ(star.d_nominal, 2);
  EXPECT_DOUBLE_EQ(star.eps_prime, 0.5);
  EXPECT_NEAR(lambda_trace_lower_bound(13, 6), 1.8708, 1e-4);
  EXPECT_NEAR(lambda_trace_lower_bound(9, 8), 1.0, 1e-12);
  EXPECT_THROW(lambda_trace_lower_bound(9, 9), std::invalid_argument);
}

TEST(Examples, Mixing) {
  Graph k4 = families::complete(4);
  auto r = mixing_check(k4, certify_ndl(k4), MixingMode::exhaustive());
  EXPECT_EQ(r.pairs_checked, 225u);
  EXPECT_LE(r.max_violation, 1e-9);
  Graph p = gen_paley(13);
  EXPECT_LE(mixing_check(p, certify_ndl(p), MixingMode::exhaustive(1)).max_violation, 0.0);
}

TEST(Examples, Adversaries) {
  Graph k4 = families::complete(4);
  DeletionPlan bip = bipartition_adversary(k4, 1, 3);
  EXPECT_EQ(bip.edges.size(), 2u);
  EXPECT_TRUE(bip.complete);
  EXPECT_TRUE(is_bipartite(bip.residual(k4)));
  EXPECT_EQ(bip.residual(k4).edge_count(), 4u);

  DeletionPlan c4 = bipartition_plan(families::cycle(4), {0, 1, 0, 1}, 1, 0);
  EXPECT_TRUE(c4.edges.empty());
  EXPECT_TRUE(c4.complete);

  DeletionPlan tri = cycle_destroyer(k4, 3, 3, 1);
  EXPECT_TRUE(tri.complete);
  EXPECT_FALSE(find_triangle(tri.residual(k4)));
  for (int c : tri.per_vertex_deleted) EXPECT_LE(c, 3);
  DeletionPlan none = cycle_destroyer(families::cycle(5), 3, 0, 1);
  EXPECT_TRUE(none.edges.empty());
  EXPECT_TRUE(none.complete);

  EXPECT_TRUE(random_capped_adversary(gen_gnp({50, 0.3, 1}), 0.0, 1).edges.empty());
  DeletionPlan k10 = random_capped_adversary(families::complete(10), 0.4, 2);
  for (int c : k10.per_vertex_deleted) EXPECT_LE(c, 3);
  Graph g = gen_gnp({200, 0.3, 4});
  EXPECT_TRUE(validate_budget(random_capped_adversary(g, 0.3, 4), g).pass);
}

TEST(Examples, Expansion) {
  EXPECT_EQ(expansion_ratio(families::cycle(5), {1, 1}, ExpansionMode::exhaustive()).min_ratio, 2.0);
  auto k10 = expansion_ratio(families::complete(10), {1, 3}, ExpansionMode::exhaustive());
  EXPECT_NEAR(k10.min_ratio, 7.0 / 3.0, 1e-12);
  EXPECT_EQ(k10.witness.size(), 3u);
  EXPECT_EQ(grow_layers(families::path(4), 0, 3).sizes(), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(grow_layers(families::complete(5), 2, 2).sizes(), (std::vector<std::size_t>{1, 4, 0}));
}

TEST(Examples, CodegreeAndSpread) {
  EXPECT_TRUE(codegree_check(families::star(6), 0, 3, 2.0).pass);
  auto c8 = codegree_check(families::cycle(8), 0, 4);
  EXPECT_LE(c8.max_codegree, 2u);
  EXPECT_TRUE(large_set_halfspread_check(families::complete(10), VertexSet{0}, 0.2).pass);
  EXPECT_FALSE(large_set_halfspread_check(families::empty(10), VertexSet{0, 1, 2}, 0.2).pass);
  // a triangle: X_1 = {1}, Y_1 = {2} leave nothing outside Z_1
  Graph tri = families::complete(3);
  EXPECT_THROW(grow_twin_layers(tri, 0, certify_ndl(tri), 0.1, 5), StructuralError);
}

TEST(Examples, PathsAndCycles) {
  auto budget = SearchBudget::thorough();
  EXPECT_EQ(posa_long_path(families::path(4), 0, budget, 1).length(), 3);
  EXPECT_EQ(posa_long_path(families::complete(6), 4, budget, 1).vertices.size(), 6u);
  EXPECT_EQ(posa_hamilton_cycle(families::complete(5), budget, 1)->length(), 5);
  EXPECT_TRUE(find_cycle_fixed_length(families::complete(4), 3, budget, 1).found());
  EXPECT_TRUE(long_cycle_via_subset(families::complete(10), 7, budget, 1).found());
  Graph g = gen_gnp({60, 0.3, 2});
  EXPECT_EQ(long_cycle_via_subset(g, 60, budget, 1).found(), posa_hamilton_cycle(g, budget, 1).has_value());
  EXPECT_THROW(proof_guided_medium_cycle(g, 0, 2, 2, budget, 1), std::invalid_argument);
}

TEST(Examples, SpectrumAndOracle) {
  EXPECT_TRUE(cycle_spectrum(families::complete(6)).all_found());
  auto c7 = cycle_spectrum(families::cycle(7));
  EXPECT_EQ(c7.lengths(Verdict::found), std::vector<int>{7});
  EXPECT_EQ(c7.lengths(Verdict::absent), (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(exact_cycle_spectrum_oracle(families::complete(4)).lengths(Verdict::found), (std::vector<int>{3, 4}));
  EXPECT_EQ(exact_cycle_spectrum_oracle(families::cycle(6)).lengths(Verdict::found), std::vector<int>{6});
}

TEST(Examples, Experiments) {
  auto zero = tightness_demo_triangles(100, 0.0, {7});
  EXPECT_EQ(zero.complete_count(), 1);
  EXPECT_EQ(zero.rows[0].deleted_edges, 0u);
  auto k6 = bondy_check(families::complete(6));
  EXPECT_TRUE(k6.dirac_hypothesis && k6.ok());
  EXPECT_FALSE(bondy_check(families::cycle(8)).dirac_hypothesis);
}
