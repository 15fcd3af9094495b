#pragma once

// Independent brute-force helpers for tests. Nothing here calls the library's
// checkers or solvers; graphs are turned into closed-neighbourhood bitmasks
// and every subset is tried.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "idcodes/graph.hpp"

namespace oracle {

using idcodes::Edge;
using idcodes::Graph;
using idcodes::Vertex;

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    m[v] = 1u << v;
    for (Vertex w : g.neighbors(v)) m[v] |= 1u << w;
  }
  return m;
}

inline bool dominates(const std::vector<std::uint32_t>& nb, std::uint32_t code) {
  for (std::uint32_t row : nb) {
    if ((row & code) == 0) return false;
  }
  return true;
}

inline bool identifies(const std::vector<std::uint32_t>& nb, std::uint32_t code) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t row : nb) {
    const std::uint32_t sig = row & code;
    if (sig == 0 || !seen.insert(sig).second) return false;
  }
  return true;
}

inline bool identifies(const Graph& g, const std::vector<Vertex>& code) {
  std::uint32_t mask = 0;
  for (Vertex v : code) mask |= 1u << v;
  return identifies(closed_masks(g), mask);
}

inline std::vector<std::uint32_t> subsets_by_size(std::size_t n) {
  std::vector<std::uint32_t> all(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < all.size(); ++s) all[s] = s;
  std::stable_sort(all.begin(), all.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return all;
}

/// Minimum identifying code size, or nullopt if none exists. n <= 16.
inline std::optional<std::size_t> min_idcode(const Graph& g) {
  const auto nb = closed_masks(g);
  for (std::uint32_t s : subsets_by_size(g.order())) {
    if (identifies(nb, s)) return std::popcount(s);
  }
  return std::nullopt;
}

inline std::size_t min_dominating(const Graph& g) {
  const auto nb = closed_masks(g);
  for (std::uint32_t s : subsets_by_size(g.order())) {
    if (dominates(nb, s)) return std::popcount(s);
  }
  return g.order();
}

inline bool has_twins(const Graph& g) {
  const auto nb = closed_masks(g);
  for (std::size_t u = 0; u < nb.size(); ++u) {
    for (std::size_t v = u + 1; v < nb.size(); ++v) {
      if (nb[u] == nb[v]) return true;
    }
  }
  return false;
}

inline Graph from_pairs(std::size_t n, std::uint64_t bits) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if (bits >> k & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Every labelled graph on n vertices.
inline std::vector<Graph> all_graphs(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) out.push_back(from_pairs(n, bits));
  return out;
}

/// Every labelled tree on n >= 2 vertices, decoded from Prüfer sequences.
inline std::vector<Graph> all_trees(std::size_t n) {
  if (n == 2) return {Graph(2, std::vector<Edge>{{0, 1}})};
  std::vector<Graph> out;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (Vertex x : seq) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    Vertex a = 0;
    while (degree[a] != 1) ++a;
    Vertex b = a + 1;
    while (degree[b] != 1) ++b;
    edges.emplace_back(a, b);
    out.emplace_back(n, edges);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Fixed corpus: all graphs on 1..5 vertices, all trees on 6 and 7 vertices,
/// and 300 seeded random graphs on 6 and 7 vertices.
inline const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto g = all_graphs(n);
      out.insert(out.end(), g.begin(), g.end());
    }
    for (std::size_t n = 6; n <= 7; ++n) {
      auto t = all_trees(n);
      out.insert(out.end(), t.begin(), t.end());
    }
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 300; ++i) out.push_back(random_graph(6 + i % 2, 0.25 + 0.5 * (i % 3) / 2.0, rng));
    return out;
  }();
  return graphs;
}

}  // namespace oracle
