#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idcodes {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free subset of {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  /// Members may be unsorted and may repeat; throws GraphError if any is
  /// outside the universe.
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  static VertexSet all(std::size_t universe);
  static VertexSet from_mask(const std::vector<char>& mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Indicator vector of length universe().
  std::vector<char> mask() const;

  VertexSet united(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists
/// are sorted; there are no loops and no parallel edges.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on loops or out-of-range endpoints. Duplicate edges
  /// are merged.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// N[v], sorted.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  /// All edges sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy with the given edges removed. Edges absent from the graph are
  /// ignored.
  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

enum class FamilyKind {
  kPath,
  kCycle,
  kStar,
  kComplete,
  kCompleteBipartite,
  kDisjointCliques,
  kConnectedCliques,
  kGnp,
};

/// Parameters of a generated graph family. Fields not used by a kind are
/// ignored.
///   path/cycle/complete: n vertices
///   star: K_{1,n}, centre 0
///   complete_bipartite: parts {0..r-1} and {r..r+s-1}
///   disjoint/connected cliques: k cliques of order delta+1
///   gnp: G(n, p) drawn from seed
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t delta = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  static FamilySpec path(std::size_t n) { return {FamilyKind::kPath, n}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::kCycle, n}; }
  static FamilySpec star(std::size_t leaves) { return {FamilyKind::kStar, leaves}; }
  static FamilySpec complete(std::size_t n) { return {FamilyKind::kComplete, n}; }
  static FamilySpec complete_bipartite(std::size_t r, std::size_t s) {
    return {FamilyKind::kCompleteBipartite, 0, r, s};
  }
  static FamilySpec disjoint_cliques(std::size_t delta, std::size_t k) {
    return {FamilyKind::kDisjointCliques, 0, 0, 0, delta, k};
  }
  static FamilySpec connected_cliques(std::size_t delta, std::size_t k) {
    return {FamilyKind::kConnectedCliques, 0, 0, 0, delta, k};
  }
  static FamilySpec gnp(std::size_t n, double p, std::uint64_t seed) {
    return {FamilyKind::kGnp, n, 0, 0, 0, 0, p, seed};
  }
};

std::string to_string(const FamilySpec& spec);

/// Largest vertex and edge counts generate() accepts.
inline constexpr std::size_t kMaxVertices = 1'000'000;
inline constexpr std::size_t kMaxEdges = 50'000'000;

/// Throws GraphError on invalid parameters or when the result would exceed
/// kMaxVertices / kMaxEdges.
Graph generate(const FamilySpec& spec);

Graph complement(const Graph& g);

/// Unordered pairs {u, v} (u < v) with N[u] = N[v], sorted.
std::vector<Edge> find_twins(const Graph& g);
bool is_twin_free(const Graph& g);

/// Unordered pairs u < v joined by a path of length at most two, sorted.
std::vector<Edge> dist2_pairs(const Graph& g);

/// Calls visit(u, v) once per distance-<=2 pair with u < v, grouped by u in
/// increasing order. Avoids materialising the full list.
template <typename Visit>
void for_each_dist2_pair(const Graph& g, Vertex u, std::vector<char>& seen,
                         std::vector<Vertex>& touched, Visit&& visit);

/// Throws GraphError on the empty graph.
DegreeStats degree_stats(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced by a sorted vertex list, relabelled to 0..|vertices|-1
/// preserving order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// True iff h has the same vertex set as g and E(h) is a subset of E(g).
bool is_spanning_subgraph(const Graph& g, const Graph& h);

// Edge-list text: "n m" then m lines "u v" with u < v.
void write_edge_list(std::ostream& out, const Graph& g);
/// Throws GraphError with a line number on malformed input.
Graph read_edge_list(std::istream& in);
void write_dot(std::ostream& out, const Graph& g);

// One vertex index per line.
void write_vertex_set(std::ostream& out, const VertexSet& set);
VertexSet read_vertex_set(std::istream& in, std::size_t universe);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_dist2_pair(const Graph& g, Vertex u, std::vector<char>& seen,
                         std::vector<Vertex>& touched, Visit&& visit) {
  touched.clear();
  for (Vertex x : g.neighbors(u)) {
    if (x > u && !seen[x]) {
      seen[x] = 1;
      touched.push_back(x);
    }
    for (Vertex y : g.neighbors(x)) {
      if (y > u && !seen[y]) {
        seen[y] = 1;
        touched.push_back(y);
      }
    }
  }
  std::sort(touched.begin(), touched.end());
  for (Vertex v : touched) {
    seen[v] = 0;
    visit(u, v);
  }
}

}  // namespace idcodes
