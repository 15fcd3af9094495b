#pragma once

#include <cstdint>
#include <stdexcept>

#include "idcodes/graph.hpp"

namespace idcodes {

/// The graph has closed twins, so no identifying code exists.
class NotTwinFreeError : public std::runtime_error {
 public:
  NotTwinFreeError(Vertex u, Vertex v);
  Edge twins;
};

enum class SolveStatus {
  kOptimal,
  kBudgetExceeded,  // `code` is the best incumbent, not proven minimum
};

struct SolveResult {
  VertexSet code;
  SolveStatus status = SolveStatus::kOptimal;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Branch and bound exact solvers work on 64-bit vertex masks.
inline constexpr std::size_t kMaxExactOrder = 64;

/// Minimum identifying code. The search branches on the separators of the
/// hardest unresolved pair and prunes with the counting bound
/// (classes * 2^k >= n + 1) and a bound on pairs still to be separated.
/// Throws NotTwinFreeError, or std::invalid_argument when
/// g.order() > kMaxExactOrder or g is empty.
SolveResult exact_min_idcode(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

/// Minimum dominating set, same conventions as exact_min_idcode.
SolveResult exact_min_dominating(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

/// Greedy max-coverage dominating set; ties go to the lowest index.
VertexSet greedy_dominating(const Graph& g);

/// Greedy test-cover heuristic: each step adds the vertex maximising newly
/// dominated vertices plus newly separated pairs (ties to the lowest index).
/// The result is verified before it is returned. Throws NotTwinFreeError.
VertexSet greedy_idcode(const Graph& g);

}  // namespace idcodes
