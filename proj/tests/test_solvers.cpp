#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "idcodes/bounds.hpp"
#include "idcodes/codes.hpp"
#include "idcodes/solvers.hpp"
#include "oracle.hpp"

using namespace idcodes;

TEST(ExactIdcode, Examples) {
  const SolveResult p3 = exact_min_idcode(generate(FamilySpec::path(3)));
  EXPECT_EQ(p3.code, VertexSet(3, {0, 2}));
  EXPECT_EQ(p3.status, SolveStatus::kOptimal);
  EXPECT_EQ(exact_min_idcode(generate(FamilySpec::cycle(4))).code.size(), 3u);
  EXPECT_THROW(exact_min_idcode(generate(FamilySpec::complete(4))), NotTwinFreeError);
  const SolveResult star = exact_min_idcode(generate(FamilySpec::star(4)));
  EXPECT_EQ(star.code.size(), 4u);
  EXPECT_TRUE(star.code.contains(0));
}

TEST(ExactIdcode, TwinWitness) {
  try {
    exact_min_idcode(generate(FamilySpec::complete(3)));
    FAIL();
  } catch (const NotTwinFreeError& e) {
    EXPECT_EQ(e.twins, Edge(0, 1));
  }
}

TEST(ExactIdcode, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + i % 10;
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (i % 4) / 4.0, rng);
    const auto expected = oracle::min_idcode(g);
    if (!expected) {
      EXPECT_THROW(exact_min_idcode(g), NotTwinFreeError);
      continue;
    }
    const SolveResult r = exact_min_idcode(g);
    EXPECT_EQ(r.code.size(), *expected);
    EXPECT_TRUE(oracle::identifies(g, r.code.members()));
    if (g.size() > 0) {
      EXPECT_GE(r.code.size(), bounds::idcode_lower_bound(n));
      EXPECT_LE(r.code.size(), n - 1);
    }
  }
}

TEST(ExactIdcode, LargerInstances) {
  // Cycles on n >= 7 vertices need n/2 (even) or (n+3)/2 (odd) code vertices.
  for (std::size_t n : {20u, 33u, 48u}) {
    const Graph g = generate(FamilySpec::cycle(n));
    const SolveResult r = exact_min_idcode(g);
    EXPECT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_EQ(r.code.size(), n % 2 == 0 ? n / 2 : (n + 3) / 2);
    EXPECT_TRUE(is_identifying_code(g, r.code).ok);
    EXPECT_LE(r.code.size(), greedy_idcode(g).size());
  }
  const Graph gnp = generate(FamilySpec::gnp(40, 0.5, 2));
  const SolveResult r = exact_min_idcode(gnp);
  EXPECT_TRUE(is_identifying_code(gnp, r.code).ok);
  EXPECT_GE(r.code.size(), bounds::idcode_lower_bound(40));
}

TEST(ExactIdcode, BudgetReturnsIncumbent) {
  const Graph g = generate(FamilySpec::gnp(60, 0.3, 5));
  const SolveResult r = exact_min_idcode(g, 1);
  EXPECT_EQ(r.status, SolveStatus::kBudgetExceeded);
  EXPECT_TRUE(is_identifying_code(g, r.code).ok);
}

TEST(ExactIdcode, RejectsOversized) {
  EXPECT_THROW(exact_min_idcode(generate(FamilySpec::path(65))), std::invalid_argument);
  EXPECT_THROW(exact_min_idcode(Graph()), std::invalid_argument);
}

TEST(ExactDominating, Examples) {
  EXPECT_EQ(exact_min_dominating(generate(FamilySpec::complete(5))).code.size(), 1u);
  EXPECT_EQ(exact_min_dominating(generate(FamilySpec::path(4))).code.size(), 2u);
  EXPECT_EQ(exact_min_dominating(generate(FamilySpec::disjoint_cliques(3, 2))).code.size(), 2u);
}

TEST(ExactDominating, MatchesOracle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 12;
    const Graph g = oracle::random_graph(n, 0.1 + 0.5 * (i % 5) / 5.0, rng);
    const SolveResult r = exact_min_dominating(g);
    EXPECT_EQ(r.code.size(), oracle::min_dominating(g));
    EXPECT_TRUE(is_dominating(g, r.code).ok);
  }
}

TEST(GreedyDominating, Examples) {
  EXPECT_EQ(greedy_dominating(generate(FamilySpec::complete(7))), VertexSet(7, {0}));
  EXPECT_EQ(greedy_dominating(generate(FamilySpec::disjoint_cliques(4, 6))).size(), 6u);
  const Graph h = generate(FamilySpec::disjoint_cliques(15, 32));
  const VertexSet d = greedy_dominating(h);
  EXPECT_EQ(d.size(), 32u);
  EXPECT_LE(static_cast<double>(d.size()), 512.0 * (1.0 + std::log(16.0)) / 16.0);
}

TEST(GreedyDominating, AlwaysValidAndNotBelowOptimum) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(3 + i % 12, 0.3, rng);
    const VertexSet d = greedy_dominating(g);
    EXPECT_TRUE(is_dominating(g, d).ok);
    EXPECT_GE(d.size(), oracle::min_dominating(g));
  }
}

TEST(GreedyIdcode, Examples) {
  const VertexSet p3 = greedy_idcode(generate(FamilySpec::path(3)));
  EXPECT_GE(p3.size(), 2u);
  EXPECT_LE(p3.size(), 3u);
  const Graph c4 = generate(FamilySpec::cycle(4));
  EXPECT_GE(greedy_idcode(c4).size(), 3u);
  EXPECT_TRUE(is_identifying_code(c4, greedy_idcode(c4)).ok);
  const Graph star = generate(FamilySpec::star(6));
  EXPECT_GE(greedy_idcode(star).size(), 6u);
  EXPECT_EQ(oracle::min_idcode(star), 6u);
  EXPECT_THROW(greedy_idcode(generate(FamilySpec::complete(3))), NotTwinFreeError);
}

TEST(GreedyIdcode, ValidAndNotBelowOptimum) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(3 + i % 10, 0.4, rng);
    if (oracle::has_twins(g)) continue;
    const VertexSet c = greedy_idcode(g);
    EXPECT_TRUE(oracle::identifies(g, c.members()));
    EXPECT_GE(c.size(), exact_min_idcode(g).code.size());
  }
}

TEST(GreedyIdcode, LargeGraph) {
  const Graph g = generate(FamilySpec::gnp(400, 0.5, 1));
  const VertexSet c = greedy_idcode(g);
  EXPECT_TRUE(is_identifying_code(g, c).ok);
  EXPECT_GE(c.size(), bounds::idcode_lower_bound(400));
}

TEST(Sensitivity, EdgeDeletionOnSmallGraphs) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(5 + i % 5, 0.45, rng);
    if (oracle::has_twins(g)) continue;
    const std::size_t base = exact_min_idcode(g).code.size();
    for (const Edge& e : g.edges()) {
      const Edge removed[] = {e};
      const Graph h = g.without_edges(removed);
      if (oracle::has_twins(h)) continue;
      ++checked;
      EXPECT_LE(base, exact_min_idcode(h).code.size() + bounds::edge_deletion_sensitivity_bound());
    }
  }
  EXPECT_GT(checked, 100);
}
