#include "idcodes/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "idcodes/random.hpp"

namespace idcodes {

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw GraphError("vertex " + std::to_string(members_.back()) +
                     " out of range for " + std::to_string(universe_) + " vertices");
  }
}

VertexSet VertexSet::all(std::size_t universe) {
  std::vector<Vertex> members(universe);
  std::iota(members.begin(), members.end(), Vertex{0});
  return VertexSet(universe, std::move(members));
}

VertexSet VertexSet::from_mask(const std::vector<char>& mask) {
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) members.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(mask.size(), std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask() const {
  std::vector<char> m(universe_, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  return VertexSet(std::max(universe_, other.universe_), std::move(merged));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw GraphError("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  std::vector<Vertex> result(adjacency_[v].begin(), adjacency_[v].end());
  result.insert(std::upper_bound(result.begin(), result.end(), v), v);
  return result;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(edge_count_);
  for (const Edge& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(order(), kept);
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case FamilyKind::kPath: out << "path(" << spec.n << ")"; break;
    case FamilyKind::kCycle: out << "cycle(" << spec.n << ")"; break;
    case FamilyKind::kStar: out << "star(" << spec.n << ")"; break;
    case FamilyKind::kComplete: out << "complete(" << spec.n << ")"; break;
    case FamilyKind::kCompleteBipartite:
      out << "complete_bipartite(" << spec.r << "," << spec.s << ")";
      break;
    case FamilyKind::kDisjointCliques:
      out << "disjoint_cliques(" << spec.delta << "," << spec.k << ")";
      break;
    case FamilyKind::kConnectedCliques:
      out << "connected_cliques(" << spec.delta << "," << spec.k << ")";
      break;
    case FamilyKind::kGnp:
      out << "gnp(" << spec.n << "," << spec.p << "," << spec.seed << ")";
      break;
  }
  return out.str();
}

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw GraphError(what);
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kMaxVertices * kMaxVertices / a) {
    throw GraphError("family size overflow");
  }
  return a * b;
}

void check_limits(std::size_t n, std::size_t m) {
  require(n <= kMaxVertices, "too many vertices: " + std::to_string(n));
  require(m <= kMaxEdges, "too many edges: " + std::to_string(m));
}

void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t order) {
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      edges.emplace_back(first + static_cast<Vertex>(i), first + static_cast<Vertex>(j));
    }
  }
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::kPath: {
      require(spec.n >= 1, "path needs n >= 1");
      check_limits(spec.n, spec.n - 1);
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
      return Graph(spec.n, edges);
    }
    case FamilyKind::kCycle: {
      require(spec.n >= 3, "cycle needs n >= 3");
      check_limits(spec.n, spec.n);
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, static_cast<Vertex>(spec.n - 1));
      return Graph(spec.n, edges);
    }
    case FamilyKind::kStar: {
      require(spec.n >= 1, "star needs at least one leaf");
      check_limits(spec.n + 1, spec.n);
      for (Vertex v = 1; v <= spec.n; ++v) edges.emplace_back(0, v);
      return Graph(spec.n + 1, edges);
    }
    case FamilyKind::kComplete: {
      require(spec.n >= 1, "complete graph needs n >= 1");
      check_limits(spec.n, checked_mul(spec.n, spec.n - 1) / 2);
      add_clique(edges, 0, spec.n);
      return Graph(spec.n, edges);
    }
    case FamilyKind::kCompleteBipartite: {
      require(spec.r >= 1 && spec.s >= 1, "complete bipartite needs r, s >= 1");
      check_limits(spec.r + spec.s, checked_mul(spec.r, spec.s));
      for (Vertex a = 0; a < spec.r; ++a) {
        for (std::size_t b = 0; b < spec.s; ++b) {
          edges.emplace_back(a, static_cast<Vertex>(spec.r + b));
        }
      }
      return Graph(spec.r + spec.s, edges);
    }
    case FamilyKind::kDisjointCliques:
    case FamilyKind::kConnectedCliques: {
      require(spec.delta >= 1 && spec.k >= 1, "cliques need delta, k >= 1");
      const std::size_t order = spec.delta + 1;
      const std::size_t n = checked_mul(order, spec.k);
      check_limits(n, checked_mul(n, spec.delta) / 2 + spec.k);
      for (std::size_t i = 0; i < spec.k; ++i) {
        add_clique(edges, static_cast<Vertex>(i * order), order);
      }
      if (spec.kind == FamilyKind::kConnectedCliques) {
        // Last vertex of clique i to first vertex of clique i+1, so every
        // degree stays in {delta, delta+1}.
        for (std::size_t i = 0; i + 1 < spec.k; ++i) {
          edges.emplace_back(static_cast<Vertex>(i * order + spec.delta),
                             static_cast<Vertex>((i + 1) * order));
        }
      }
      return Graph(n, edges);
    }
    case FamilyKind::kGnp: {
      require(spec.n >= 1, "gnp needs n >= 1");
      require(spec.p >= 0.0 && spec.p <= 1.0, "gnp needs 0 <= p <= 1");
      require(spec.n <= kMaxVertices, "too many vertices");
      Rng rng(spec.seed);
      for (Vertex u = 0; u < spec.n; ++u) {
        for (Vertex v = u + 1; v < spec.n; ++v) {
          if (rng.bernoulli(spec.p)) edges.emplace_back(u, v);
        }
        require(edges.size() <= kMaxEdges, "too many edges");
      }
      return Graph(spec.n, edges);
    }
  }
  throw GraphError("unknown family");
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  check_limits(n, checked_mul(n, n == 0 ? 0 : n - 1) / 2 - g.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

std::vector<Edge> find_twins(const Graph& g) {
  // Group by closed neighbourhood; twins lie within a group.
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) {
    groups[g.closed_neighborhood(v)].push_back(v);
  }
  std::vector<Edge> twins;
  for (const auto& [nbhd, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        twins.emplace_back(members[i], members[j]);
      }
    }
  }
  std::sort(twins.begin(), twins.end());
  return twins;
}

bool is_twin_free(const Graph& g) {
  std::map<std::vector<Vertex>, Vertex> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen.emplace(g.closed_neighborhood(v), v).second) return false;
  }
  return true;
}

std::vector<Edge> dist2_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < g.order(); ++u) {
    for_each_dist2_pair(g, u, seen, touched,
                        [&](Vertex a, Vertex b) { pairs.emplace_back(a, b); });
  }
  return pairs;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw GraphError("degree_stats of the empty graph");
  DegreeStats stats{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    stats.min_degree = std::min(stats.min_degree, g.degree(v));
    stats.max_degree = std::max(stats.max_degree, g.degree(v));
  }
  return stats;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> visited(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (visited[root]) continue;
    std::vector<Vertex> component;
    visited[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
      if (it != vertices.end() && *it == w) {
        auto j = static_cast<std::size_t>(it - vertices.begin());
        if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(vertices.size(), edges);
}

bool is_spanning_subgraph(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    auto hn = h.neighbors(v);
    auto gn = g.neighbors(v);
    if (!std::includes(gn.begin(), gn.end(), hn.begin(), hn.end())) return false;
  }
  return true;
}

}  // namespace idcodes
