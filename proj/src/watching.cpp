#include "idcodes/watching.hpp"

#include <algorithm>
#include <map>

#include "idcodes/bounds.hpp"
#include "idcodes/complement_code.hpp"
#include "idcodes/solvers.hpp"

namespace idcodes {

InvalidWatcherError::InvalidWatcherError(std::size_t i, const std::string& what)
    : std::runtime_error("watcher " + std::to_string(i) + ": " + what), index(i) {}

Verdict verify_watching(const Graph& g, const WatchingSystem& system) {
  std::vector<std::vector<std::size_t>> membership(g.order());
  for (std::size_t i = 0; i < system.watchers.size(); ++i) {
    const Watcher& w = system.watchers[i];
    if (w.host >= g.order()) throw InvalidWatcherError(i, "host out of range");
    if (w.zone.empty()) throw InvalidWatcherError(i, "empty zone");
    const auto nbhd = g.closed_neighborhood(w.host);
    for (Vertex v : w.zone) {
      if (!std::binary_search(nbhd.begin(), nbhd.end(), v)) {
        throw InvalidWatcherError(i, "zone vertex " + std::to_string(v) +
                                         " outside N[" + std::to_string(w.host) + "]");
      }
      membership[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (membership[v].empty()) return Verdict::fail(UndominatedVertex{v});
  }
  std::map<std::vector<std::size_t>, Vertex> first_with;
  std::optional<UnseparatedPair> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, inserted] = first_with.emplace(membership[v], v);
    if (!inserted) {
      UnseparatedPair pair{it->second, v};
      if (!best || std::pair(pair.u, pair.v) < std::pair(best->u, best->v)) best = pair;
    }
  }
  if (best) return Verdict::fail(*best);
  return Verdict::pass();
}

WatchingSystem watching_from_subgraph_code(const Graph& g, const Graph& h, const VertexSet& code) {
  if (!is_spanning_subgraph(g, h)) {
    throw std::invalid_argument("watching_from_subgraph_code: h is not a spanning subgraph of g");
  }
  if (Verdict v = is_identifying_code(h, code); !v) {
    throw InvalidCodeError("code does not identify the subgraph: " + describe(v));
  }
  WatchingSystem system;
  for (Vertex v : code) {
    system.watchers.push_back({v, VertexSet(g.order(), h.closed_neighborhood(v))});
  }
  return system;
}

WatchingSystem watching_binary(const Graph& g, const VertexSet& d) {
  if (Verdict v = is_dominating(g, d); !v) {
    throw NotDominatingError("watching_binary: " + describe(v));
  }
  WatchingSystem system;
  if (g.order() == 0) return system;
  const auto bits = bounds::ceil_log2(degree_stats(g).max_degree + 2);
  for (Vertex host : d) {
    const auto nbhd = g.closed_neighborhood(host);
    for (std::uint64_t bit = 0; bit < bits; ++bit) {
      std::vector<Vertex> zone;
      for (std::size_t i = 0; i < nbhd.size(); ++i) {
        if ((i + 1) >> bit & 1) zone.push_back(nbhd[i]);
      }
      if (!zone.empty()) system.watchers.push_back({host, VertexSet(g.order(), std::move(zone))});
    }
  }
  if (Verdict v = verify_watching(g, system); !v) {
    throw std::logic_error("watching_binary built an invalid system: " + describe(v));
  }
  return system;
}

WatchBounds watch_bounds(std::size_t n, std::size_t gamma, std::size_t max_degree) {
  WatchBounds out;
  out.lower = bounds::idcode_lower_bound(n);
  out.gamma = gamma;
  out.upper = gamma * bounds::ceil_log2(max_degree + 2);
  return out;
}

WatchBounds watch_bounds(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("watch_bounds needs n >= 1");
  WatchBounds out;
  out.lower = bounds::idcode_lower_bound(g.order());
  if (g.order() <= kMaxExactOrder) {
    SolveResult exact = exact_min_dominating(g);
    out.gamma = exact.code.size();
    out.gamma_exact = exact.status == SolveStatus::kOptimal;
  } else {
    out.gamma = greedy_dominating(g).size();
  }
  out.upper = out.gamma * bounds::ceil_log2(degree_stats(g).max_degree + 2);
  return out;
}

}  // namespace idcodes
