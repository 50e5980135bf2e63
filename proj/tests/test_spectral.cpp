#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "resilab/families.hpp"
#include "resilab/generators.hpp"
#include "resilab/spectral.hpp"

using namespace resilab;

TEST(Spectral, CompleteGraph) {
  auto est = second_eigenvalue(families::complete(10));
  EXPECT_NEAR(est.lambda, 1.0, 1e-8);
  EXPECT_NEAR(est.top, 9.0, 1e-8);
}

TEST(Spectral, CycleClosedForm) {
  // C_n eigenvalues 2cos(2 pi j / n); second largest magnitude at j = 1 for odd n
  auto est = second_eigenvalue(families::cycle(11));
  EXPECT_NEAR(est.lambda, 2 * std::cos(2 * M_PI * 5 / 11.0) * -1, 1e-8);
}

TEST(Spectral, PaleyClosedForm) {
  for (int q : {13, 29, 101}) {
    auto est = second_eigenvalue(gen_paley(q));
    EXPECT_NEAR(est.lambda, (1 + std::sqrt(static_cast<double>(q))) / 2, 1e-8) << q;
  }
}

TEST(Spectral, DenseMatchesJacobiOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_gnp({40, 0.2, seed});
    EXPECT_NEAR(second_eigenvalue(g, SolverMode::dense).lambda, oracle::second_abs_eigenvalue(g), 1e-7);
  }
}

TEST(Spectral, IterativeAgreesWithDense) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gen_gnp({300, 0.05, seed});
    auto dense = second_eigenvalue(g, SolverMode::dense);
    auto iter = second_eigenvalue(g, SolverMode::iterative, seed);
    EXPECT_EQ(iter.method, EigenMethod::iterative);
    EXPECT_NEAR(iter.lambda, dense.lambda, 1e-5);
  }
  Graph r = gen_random_regular({400, 6, 2});
  EXPECT_NEAR(second_eigenvalue(r, SolverMode::iterative, 1).lambda, second_eigenvalue(r).lambda, 1e-5);
}

TEST(Spectral, DisconnectedRegularGraphHasLambdaD) {
  Graph g = families::disjoint_union(families::complete(4), families::complete(4));
  auto est = second_eigenvalue(g);
  EXPECT_FALSE(est.connected);
  EXPECT_NEAR(est.lambda, 3.0, 1e-8);
}

TEST(Spectral, BipartiteDetection) {
  auto even = second_eigenvalue(families::cycle(10));
  EXPECT_TRUE(spectrally_bipartite(even));
  EXPECT_NEAR(even.lambda, 2.0, 1e-8);
  EXPECT_FALSE(spectrally_bipartite(second_eigenvalue(families::cycle(9))));
}

TEST(Spectral, TraceBoundHoldsForRegularGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (int d : {3, 6, 10}) {
      Graph g = gen_random_regular({100, d, seed});
      EXPECT_GE(second_eigenvalue(g).lambda, lambda_trace_lower_bound(100, d) - 1e-9);
    }
  }
  EXPECT_NEAR(lambda_trace_lower_bound(13, 6), std::sqrt(3.5), 1e-12);
  EXPECT_THROW(lambda_trace_lower_bound(10, 0), std::invalid_argument);
}

TEST(Spectral, CertificateFields) {
  Graph g = gen_paley(29);
  auto cert = certify_ndl(g);
  EXPECT_EQ(cert.n, 29);
  EXPECT_EQ(cert.d_nominal, 14);
  EXPECT_EQ(cert.eps_prime, 0.0);
  EXPECT_NEAR(cert.lambda, (1 + std::sqrt(29.0)) / 2, 1e-8);
  // d^2 / (n lambda) at k = 3
  EXPECT_NEAR(pseudo_random_ratio(cert, 3), 14.0 * 14.0 / (29 * cert.lambda), 1e-9);
  EXPECT_THROW(pseudo_random_ratio(cert, 2), std::invalid_argument);
}

TEST(Mixing, ExhaustiveOnPaleyThirteen) {
  Graph g = gen_paley(13);
  auto cert = certify_ndl(g);
  auto report = mixing_check(g, cert, MixingMode::exhaustive(4));
  EXPECT_LE(report.max_violation, 1e-9);
  EXPECT_GT(report.pairs_checked, 0u);
}

TEST(Mixing, SampledOnRegularGraph) {
  Graph g = gen_random_regular({300, 8, 4});
  auto cert = certify_ndl(g);
  auto report = mixing_check(g, cert, MixingMode::sampled(2000, 3));
  EXPECT_EQ(report.pairs_checked, 2000u);
  EXPECT_LE(report.max_violation, 1e-9);
}

TEST(Mixing, UnderstatedLambdaIsCaught) {
  Graph g = gen_paley(13);
  auto cert = certify_ndl(g);
  cert.lambda = 0.5;
  auto report = mixing_check(g, cert, MixingMode::exhaustive(3));
  EXPECT_GT(report.max_violation, 0.0);
  EXPECT_FALSE(report.worst_x.empty());
}

TEST(Mixing, ExhaustiveGuards) {
  Graph g = gen_gnp({80, 0.1, 1});
  EXPECT_THROW(mixing_check(g, certify_ndl(g), MixingMode::exhaustive(2)), std::invalid_argument);
  Graph h = gen_paley(29);
  EXPECT_THROW(mixing_check(h, certify_ndl(h), MixingMode::exhaustive()), std::invalid_argument);
}
