#include "idcodes/complement_code.hpp"

#include <algorithm>
#include <map>

#include "idcodes/codes.hpp"
#include "idcodes/solvers.hpp"

namespace idcodes {

ComplementNotTwinFreeError::ComplementNotTwinFreeError(Vertex u, Vertex v)
    : std::runtime_error("complement is not twin-free: " + std::to_string(u) + " and " +
                         std::to_string(v) + " are twins there"),
      twins(u, v) {}

EquivClassPartition equivalence_classes(const Graph& g, const VertexSet& c0) {
  if (Verdict v = is_identifying_code(g, c0); !v) {
    throw InvalidCodeError("c0 is not an identifying code: " + describe(v));
  }
  // Equal open traces already force non-adjacency when c0 identifies g.
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> open_trace;
    for (Vertex w : g.neighbors(v)) {
      if (c0.contains(w)) open_trace.push_back(w);
    }
    groups[open_trace].push_back(v);
  }
  EquivClassPartition partition;
  for (auto& [trace, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (g.has_edge(members[i], members[j])) {
          throw std::logic_error("adjacent vertices share an open trace under an identifying code");
        }
      }
    }
    partition.classes.push_back(std::move(members));
  }
  std::sort(partition.classes.begin(), partition.classes.end());
  return partition;
}

namespace {

void split(const Graph& gbar, std::vector<Vertex> cls, std::vector<Vertex>& out) {
  if (cls.size() < 2) return;
  const auto a = gbar.closed_neighborhood(cls[0]);
  const auto b = gbar.closed_neighborhood(cls[1]);
  std::vector<Vertex> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diff.empty()) {
    throw NoSeparatorError("vertices " + std::to_string(cls[0]) + " and " + std::to_string(cls[1]) +
                           " are twins in the complement");
  }
  const Vertex w = diff.front();
  if (std::binary_search(cls.begin(), cls.end(), w)) {
    throw std::logic_error("separator " + std::to_string(w) + " lies inside its class");
  }
  out.push_back(w);
  std::vector<Vertex> near;
  std::vector<Vertex> far;
  for (Vertex u : cls) (gbar.has_edge(u, w) ? near : far).push_back(u);
  split(gbar, std::move(near), out);
  split(gbar, std::move(far), out);
}

}  // namespace

VertexSet separate_class(const Graph& gbar, std::span<const Vertex> cls) {
  std::vector<Vertex> members(cls.begin(), cls.end());
  std::sort(members.begin(), members.end());
  std::vector<Vertex> chosen;
  split(gbar, std::move(members), chosen);
  return VertexSet(gbar.order(), std::move(chosen));
}

VertexSet complement_code(const Graph& g, const std::optional<VertexSet>& c0) {
  if (auto twins = find_twins(g); !twins.empty()) {
    throw NotTwinFreeError(twins.front().u, twins.front().v);
  }
  const Graph gbar = complement(g);
  if (auto twins = find_twins(gbar); !twins.empty()) {
    throw ComplementNotTwinFreeError(twins.front().u, twins.front().v);
  }
  const VertexSet base = c0 ? *c0 : exact_min_idcode(g).code;
  const EquivClassPartition partition = equivalence_classes(g, base);

  VertexSet code = base;
  for (const auto& cls : partition.classes) {
    if (cls.size() >= 2) code = code.united(separate_class(gbar, cls));
  }

  std::vector<Vertex> undominated;
  const auto mask = code.mask();
  for (Vertex v = 0; v < gbar.order(); ++v) {
    const auto nbhd = gbar.closed_neighborhood(v);
    if (std::none_of(nbhd.begin(), nbhd.end(), [&](Vertex w) { return mask[w] != 0; })) {
      undominated.push_back(v);
    }
  }
  if (undominated.size() > 1) {
    throw std::logic_error("complement code leaves " + std::to_string(undominated.size()) +
                           " vertices undominated");
  }
  if (!undominated.empty()) code = code.united(VertexSet(g.order(), undominated));

  if (Verdict v = is_identifying_code(gbar, code); !v) {
    throw std::logic_error("complement code failed verification: " + describe(v));
  }
  return code;
}

}  // namespace idcodes
