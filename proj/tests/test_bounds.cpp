#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "idcodes/bounds.hpp"
#include "idcodes/solvers.hpp"
#include "oracle.hpp"

using namespace idcodes;
using namespace idcodes::bounds;

TEST(IdcodeLowerBound, Examples) {
  EXPECT_EQ(idcode_lower_bound(7), 3u);
  EXPECT_EQ(idcode_lower_bound(1), 1u);
  EXPECT_EQ(idcode_lower_bound(15), 4u);
  EXPECT_EQ(idcode_lower_bound(16), 5u);
  EXPECT_EQ(idcode_lower_bound(100), 7u);
}

TEST(CeilLog2, Values) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(3), 2u);
  EXPECT_EQ(ceil_log2(8), 3u);
  EXPECT_EQ(ceil_log2(9), 4u);
  EXPECT_EQ(ceil_log2(std::uint64_t{1} << 63), 63u);
  EXPECT_THROW(ceil_log2(0), std::invalid_argument);
}

TEST(Chernoff, Values) {
  const double one = chernoff_constant(1.0);
  EXPECT_NEAR(one, 2.0 * std::log(2.0) - 1.0, 1e-12);
  EXPECT_GT(one, 1.0 / 3.0);
  const double half = chernoff_constant(0.5);
  EXPECT_NEAR(half, 1.5 * std::log(1.5) - 0.5, 1e-12);
  EXPECT_GT(half, 0.1);
  EXPECT_LT(half, 0.1083);
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    EXPECT_NEAR(chernoff_constant(eps) / (eps * eps / 2.0), 1.0, 2.0 * eps);
  }
  EXPECT_THROW(chernoff_constant(0.0), std::invalid_argument);
}

TEST(Alpha0, Values) {
  EXPECT_NEAR(alpha0(0.0), 0.5, 1e-9);
  const double a1 = alpha0(1.0);
  EXPECT_NEAR(a1, 0.171, 0.001);
  // Direct evaluation, independent of the library's equation helper.
  EXPECT_NEAR(a1 * std::log((1.0 + a1) * std::exp(1.0) / a1) - 0.5, 0.0, 1e-8);
  EXPECT_LT(alpha0(2.0), a1);
  EXPECT_THROW(alpha0(-1.0), std::invalid_argument);
}

TEST(Alpha0, SmallestRootProperty) {
  for (double m : {0.0, 0.25, 1.0, 2.0, 5.0, 20.0}) {
    const double a = alpha0(m);
    EXPECT_LE(std::abs(alpha_equation(m, a)), 1e-8);
    EXPECT_LT(alpha_equation(m, a / 2.0), 0.0);
    EXPECT_GT(alpha_equation(m, 1.0), 0.0);
  }
}

TEST(SparseEdgeThreshold, Values) {
  EXPECT_NEAR(sparse_edge_threshold(0.0), 0.125, 1e-9);
  EXPECT_NEAR(sparse_edge_threshold(1.0), 0.0428, 0.0001);
  EXPECT_DOUBLE_EQ(clique_deletion_threshold(1.0), sparse_edge_threshold(2.0));
}

TEST(SparseEdgeThreshold, HoldsOnSolvedGraphs) {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + i % 9;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (i % 6) / 6.0, rng);
    if (oracle::has_twins(g)) continue;
    const double size = static_cast<double>(exact_min_idcode(g).code.size());
    const double ln_n = std::log(static_cast<double>(n));
    for (double m : {1.0, 2.0}) {
      if (size <= m * ln_n) {
        ++checked;
        EXPECT_GE(static_cast<double>(g.size()), sparse_edge_threshold(m) * n * ln_n);
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(GnpPrediction, Values) {
  EXPECT_NEAR(gnp_idcode_prediction(1000, 0.5), 19.93, 0.01);
  EXPECT_NEAR(gnp_idcode_prediction(100, 0.5), 13.29, 0.01);
  for (double p : {0.1, 0.3, 0.45, 0.55, 0.9}) {
    EXPECT_GT(gnp_idcode_prediction(500, p), gnp_idcode_prediction(500, 0.5));
  }
  EXPECT_THROW(gnp_idcode_prediction(100, 0.0), std::invalid_argument);
  EXPECT_THROW(gnp_idcode_prediction(1, 0.5), std::invalid_argument);
}

TEST(BipartiteBound, Values) {
  EXPECT_EQ(bipartite_subgraph_bound(1), 2u);
  EXPECT_EQ(bipartite_subgraph_bound(2), 12u);
  EXPECT_EQ(bipartite_subgraph_bound(3), 56u);
  EXPECT_THROW(bipartite_subgraph_bound(0), std::invalid_argument);
  EXPECT_THROW(bipartite_subgraph_bound(32), std::invalid_argument);
}

TEST(Sensitivity, PathAndCycle) {
  EXPECT_EQ(edge_deletion_sensitivity_bound(), 2);
  for (const Graph& g : {generate(FamilySpec::path(4)), generate(FamilySpec::cycle(5))}) {
    const std::size_t base = exact_min_idcode(g).code.size();
    for (const Edge& e : g.edges()) {
      const Edge removed[] = {e};
      const Graph h = g.without_edges(removed);
      if (!is_twin_free(h)) continue;
      EXPECT_LE(base, exact_min_idcode(h).code.size() + 2);
    }
  }
}

TEST(Report, Formatting) {
  BoundReport r{"alpha0", 0.5, {{"m", 0.0}}};
  EXPECT_EQ(format(r), "alpha0 m=0 value=0.5");
  BoundReport i{"idcode-lower", std::uint64_t{3}, {{"n", 7.0}}};
  EXPECT_EQ(format(i), "idcode-lower n=7 value=3");
}
