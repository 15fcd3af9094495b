#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

struct UndominatedVertex {
  Vertex v = 0;
  friend bool operator==(const UndominatedVertex&, const UndominatedVertex&) = default;
};

struct UnseparatedPair {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const UnseparatedPair&, const UnseparatedPair&) = default;
};

using Witness = std::variant<UndominatedVertex, UnseparatedPair>;

/// Outcome of a property check. A failing verdict always carries the
/// lexicographically least violation.
struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, w}; }
  explicit operator bool() const { return ok; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string describe(const Verdict& verdict);

enum class CheckMode {
  kFull,   // all pairs
  kDist2,  // only pairs at distance <= 2
};

/// N[v] ∩ C. Throws GraphError if v is out of range.
VertexSet signature(const Graph& g, const VertexSet& code, Vertex v);

/// N[v] ∩ C for every vertex, as sorted vertex lists.
class SignatureTable {
 public:
  SignatureTable(const Graph& g, const VertexSet& code);

  const std::vector<Vertex>& operator[](Vertex v) const { return rows_[v]; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::vector<Vertex>> rows_;
};

// The checks below run their per-vertex loops with OpenMP. Every one throws
// GraphError if the code contains a vertex outside the graph.

Verdict is_dominating(const Graph& g, const VertexSet& code);
Verdict is_separating(const Graph& g, const VertexSet& code);
/// Domination is checked first, so an undominated vertex wins over an
/// unseparated pair.
Verdict is_identifying_code(const Graph& g, const VertexSet& code,
                            CheckMode mode = CheckMode::kFull);
/// Dominating, and vertices outside the code have distinct signatures.
Verdict is_locating_dominating(const Graph& g, const VertexSet& code);

/// Straight serial implementations with quadratic pair scans, kept as the
/// cross-check for the parallel kernels and as the benchmark baseline.
namespace reference {
Verdict is_dominating(const Graph& g, const VertexSet& code);
Verdict is_separating(const Graph& g, const VertexSet& code);
Verdict is_identifying_code(const Graph& g, const VertexSet& code,
                            CheckMode mode = CheckMode::kFull);
Verdict is_locating_dominating(const Graph& g, const VertexSet& code);
}  // namespace reference

}  // namespace idcodes
