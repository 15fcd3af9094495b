#include <gtest/gtest.h>

#include <random>

#include "idcodes/complement_code.hpp"
#include "idcodes/solvers.hpp"
#include "idcodes/sparsify.hpp"
#include "idcodes/watching.hpp"
#include "oracle.hpp"

using namespace idcodes;

namespace {

Graph stars(std::size_t copies, std::size_t leaves) {
  std::vector<Edge> edges;
  const std::size_t order = leaves + 1;
  for (std::size_t i = 0; i < copies; ++i) {
    for (std::size_t j = 1; j <= leaves; ++j) {
      edges.emplace_back(static_cast<Vertex>(i * order), static_cast<Vertex>(i * order + j));
    }
  }
  return Graph(copies * order, edges);
}

}  // namespace

TEST(VerifyWatching, Examples) {
  const Graph p3 = generate(FamilySpec::path(3));
  const Verdict empty = verify_watching(p3, WatchingSystem{});
  ASSERT_FALSE(empty.ok);
  EXPECT_EQ(std::get<UndominatedVertex>(*empty.witness).v, 0u);

  WatchingSystem same;
  same.watchers.push_back({1, VertexSet(3, {0, 1, 2})});
  const Verdict v = verify_watching(p3, same);
  ASSERT_FALSE(v.ok);
  EXPECT_EQ(std::get<UnseparatedPair>(*v.witness), (UnseparatedPair{0, 1}));

  WatchingSystem good;
  good.watchers.push_back({0, VertexSet(3, {0, 1})});
  good.watchers.push_back({2, VertexSet(3, {1, 2})});
  EXPECT_TRUE(verify_watching(p3, good).ok);
}

TEST(VerifyWatching, MalformedWatchers) {
  const Graph p3 = generate(FamilySpec::path(3));
  WatchingSystem far;
  far.watchers.push_back({0, VertexSet(3, {0})});
  far.watchers.push_back({0, VertexSet(3, {2})});
  try {
    verify_watching(p3, far);
    FAIL();
  } catch (const InvalidWatcherError& e) {
    EXPECT_EQ(e.index, 1u);
  }
  WatchingSystem blank;
  blank.watchers.push_back({1, VertexSet(3, {})});
  EXPECT_THROW(verify_watching(p3, blank), InvalidWatcherError);
}

TEST(FromSubgraphCode, IdentifyingCodeOfGraphItself) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 50) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    if (oracle::has_twins(g)) continue;
    ++done;
    const VertexSet c = exact_min_idcode(g).code;
    const WatchingSystem w = watching_from_subgraph_code(g, g, c);
    EXPECT_EQ(w.size(), c.size());
    EXPECT_TRUE(verify_watching(g, w).ok);
    // gamma <= smallest constructed system <= identifying code number.
    const std::size_t gamma = exact_min_dominating(g).code.size();
    const std::size_t binary = watching_binary(g, exact_min_dominating(g).code).size();
    EXPECT_LE(gamma, std::min(w.size(), binary));
  }
}

TEST(FromSubgraphCode, SparsifiedCliques) {
  const Graph g = generate(FamilySpec::disjoint_cliques(15, 32));
  SparsifyParams p;
  p.c = 2.0;
  p.seed = 7;
  const SparsifyResult r = sparsify_weighted(g, p);
  const WatchingSystem w = watching_from_subgraph_code(g, r.subgraph, r.final_code);
  EXPECT_EQ(w.size(), r.final_code.size());
  EXPECT_TRUE(verify_watching(g, w).ok);
  for (const Watcher& watcher : w.watchers) {
    for (Vertex v : watcher.zone) EXPECT_TRUE(r.subgraph.has_edge(watcher.host, v) || v == watcher.host);
  }
}

TEST(FromSubgraphCode, Errors) {
  const Graph p3 = generate(FamilySpec::path(3));
  EXPECT_THROW(watching_from_subgraph_code(p3, p3, VertexSet(3, {1})), InvalidCodeError);
  EXPECT_THROW(watching_from_subgraph_code(p3, generate(FamilySpec::cycle(3)), VertexSet(3, {0, 2})),
               std::invalid_argument);
}

TEST(Binary, StarAndCopies) {
  const Graph one = generate(FamilySpec::star(6));
  const WatchingSystem w1 = watching_binary(one, VertexSet(7, {0}));
  EXPECT_EQ(w1.size(), 3u);
  EXPECT_TRUE(verify_watching(one, w1).ok);
  for (std::size_t copies = 1; copies <= 4; ++copies) {
    const Graph g = stars(copies, 6);
    std::vector<Vertex> centres;
    for (std::size_t i = 0; i < copies; ++i) centres.push_back(static_cast<Vertex>(7 * i));
    const WatchingSystem w = watching_binary(g, VertexSet(g.order(), centres));
    EXPECT_EQ(w.size(), 3 * copies);
    EXPECT_TRUE(verify_watching(g, w).ok);
  }
}

TEST(Binary, EdgeAndLabels) {
  const Graph k2 = generate(FamilySpec::complete(2));
  const WatchingSystem w = watching_binary(k2, VertexSet(2, {0}));
  EXPECT_LE(w.size(), 2u);
  EXPECT_TRUE(verify_watching(k2, w).ok);
  // Labels 1 and 2: vertex 0 in the first zone, vertex 1 in the second.
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.watchers[0].zone, VertexSet(2, {0}));
  EXPECT_EQ(w.watchers[1].zone, VertexSet(2, {1}));
}

TEST(Binary, RandomGraphsWithinBound) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(20, 0.2, rng);
    const VertexSet d = greedy_dominating(g);
    const WatchingSystem w = watching_binary(g, d);
    EXPECT_TRUE(verify_watching(g, w).ok);
    std::uint64_t bits = 0;
    while ((std::uint64_t{1} << bits) < degree_stats(g).max_degree + 2) ++bits;
    EXPECT_LE(w.size(), d.size() * bits);
  }
}

TEST(Binary, RequiresDomination) {
  EXPECT_THROW(watching_binary(generate(FamilySpec::path(4)), VertexSet(4, {0})), NotDominatingError);
}

TEST(Bounds, FromIngredients) {
  const WatchBounds a = watch_bounds(7, 1, 6);
  EXPECT_EQ(a.lower, 3u);
  EXPECT_EQ(a.upper, 3u);
  const WatchBounds b = watch_bounds(15, 3, 6);
  EXPECT_EQ(b.lower, 4u);
  EXPECT_EQ(b.upper, 9u);
}

TEST(Bounds, CompleteGraphsMeet) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const WatchBounds w = watch_bounds(generate(FamilySpec::complete(n)));
    EXPECT_EQ(w.gamma, 1u);
    EXPECT_TRUE(w.gamma_exact);
    EXPECT_EQ(w.lower, w.upper) << n;
  }
  const WatchBounds big = watch_bounds(generate(FamilySpec::disjoint_cliques(15, 8)));
  EXPECT_FALSE(big.gamma_exact);
  EXPECT_EQ(big.gamma, 8u);
}
