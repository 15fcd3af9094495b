#pragma once

#include <stdexcept>
#include <vector>

#include "idcodes/codes.hpp"
#include "idcodes/graph.hpp"

namespace idcodes {

struct Watcher {
  Vertex host = 0;
  VertexSet zone;  // non-empty, inside N[host]
};

struct WatchingSystem {
  std::vector<Watcher> watchers;
  std::size_t size() const { return watchers.size(); }
};

/// A watcher's zone is empty or leaves the closed neighbourhood of its host.
class InvalidWatcherError : public std::runtime_error {
 public:
  InvalidWatcherError(std::size_t index, const std::string& what);
  std::size_t index;
};

class NotDominatingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ok iff every vertex lies in at least one zone and no two vertices lie in
/// the same set of zones. An unwatched vertex is reported as
/// UndominatedVertex. Throws InvalidWatcherError on a malformed watcher.
Verdict verify_watching(const Graph& g, const WatchingSystem& system);

/// One watcher per code vertex v with zone N_h[v]. Throws
/// std::invalid_argument if h is not a spanning subgraph of g and
/// InvalidCodeError if code does not identify h.
WatchingSystem watching_from_subgraph_code(const Graph& g, const Graph& h, const VertexSet& code);

/// For each v in d, labels the members of N[v] 1, 2, 3, ... by index and
/// places L = ceil(log2(Delta + 2)) watchers on v, watcher i seeing the
/// members whose label has bit i set. Empty zones are dropped.
/// Throws NotDominatingError.
WatchingSystem watching_binary(const Graph& g, const VertexSet& d);

struct WatchBounds {
  std::uint64_t lower = 0;  // ceil(log2(n + 1))
  std::uint64_t upper = 0;  // gamma * ceil(log2(Delta + 2))
  std::size_t gamma = 0;
  bool gamma_exact = false;
};

/// Uses the exact domination number for graphs the exact solver handles
/// within its default budget, otherwise the greedy one.
WatchBounds watch_bounds(const Graph& g);

/// The two bounds from their ingredients.
WatchBounds watch_bounds(std::size_t n, std::size_t gamma, std::size_t max_degree);

}  // namespace idcodes
