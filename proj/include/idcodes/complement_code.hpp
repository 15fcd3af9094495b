#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

class InvalidCodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplementNotTwinFreeError : public std::runtime_error {
 public:
  ComplementNotTwinFreeError(Vertex u, Vertex v);
  Edge twins;
};

/// Two complement twins lie in one class, so no separator exists.
class NoSeparatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classes of the relation u ≡ v iff N(u) ∩ C0 = N(v) ∩ C0 and u, v are
/// non-adjacent. Classes are sorted and ordered by smallest member.
struct EquivClassPartition {
  std::vector<std::vector<Vertex>> classes;
};

/// Throws InvalidCodeError if c0 is not an identifying code of g.
EquivClassPartition equivalence_classes(const Graph& g, const VertexSet& c0);

/// Separates every pair of `cls` in gbar with at most |cls| - 1 vertices by
/// recursive splitting: take the lowest-index vertex w of N[u1] ⊕ N[u2] for
/// the two smallest members, split the class by adjacency to w, recurse.
/// Throws NoSeparatorError if two members are twins in gbar, std::logic_error
/// if the chosen separator lies inside the class.
VertexSet separate_class(const Graph& gbar, std::span<const Vertex> cls);

/// Identifying code of complement(g) of size at most 2 |c0|, built from an
/// identifying code c0 of g (a minimum one from the exact solver if absent).
/// The result is verified before it is returned.
/// Throws NotTwinFreeError, ComplementNotTwinFreeError, InvalidCodeError.
VertexSet complement_code(const Graph& g, const std::optional<VertexSet>& c0 = std::nullopt);

}  // namespace idcodes
