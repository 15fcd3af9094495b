#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

enum class SparsifyVariant {
  kWeighted,  // degree-weighted deletion probabilities, bad-event gate
  kUniform,   // p = c ln n / delta, every code-incident edge deleted w.p. 1/4
};

struct SparsifyParams {
  double c = 66.0;
  std::uint64_t seed = 0;
  std::uint32_t max_retries = 1000;
  bool clamp = true;
  SparsifyVariant variant = SparsifyVariant::kWeighted;
};

/// c ln(Delta) / delta (or c ln(n) / delta) exceeds 1 with clamping off.
class InfeasibleProbabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Isolated vertex or maximum degree below 2.
class DegenerateGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sampling round. Counts cover the whole graph: components accepted in
/// an earlier round contribute their accepted sample.
struct TrialDiagnostics {
  std::uint32_t trial = 0;
  std::size_t code_size = 0;
  std::size_t deleted = 0;
  std::size_t a_violations = 0;  // distance-2 pairs with a degree deviation
  std::size_t b_violations = 0;  // distance-2 pairs left unseparated
};

class RetriesExhaustedError : public std::runtime_error {
 public:
  RetriesExhaustedError(std::size_t component, TrialDiagnostics last);
  std::size_t component;
  TrialDiagnostics last_trial;
};

struct SparsifyStats {
  std::size_t deleted = 0;
  std::size_t code_size = 0;
  double n_log_delta = 0.0;             // n ln(Delta)
  double n_log_delta_over_delta = 0.0;  // n ln(Delta) / delta
};

struct SparsifyResult {
  std::vector<Edge> deleted;  // F, sorted
  VertexSet code;             // C
  VertexSet dominating;       // D
  VertexSet final_code;       // C ∪ D, an identifying code of G \ F
  Graph subgraph;             // G \ F
  /// Sampling rounds until every component was accepted (1 = first draw).
  std::uint32_t retries_used = 0;
  SparsifyStats stats;
  std::vector<TrialDiagnostics> trials;
  double probability = 0.0;  // inclusion probability used for C
};

/// Inclusion probability for the variant: min(1, c ln Delta / delta) or
/// min(1, c ln n / delta). Throws InfeasibleProbabilityError if it exceeds 1
/// with clamping disabled, DegenerateGraphError if delta = 0.
double code_probability(const Graph& g, const SparsifyParams& params);

/// Each vertex joins independently with code_probability(g, params), drawn in
/// index order from params.seed.
VertexSet pick_code(const Graph& g, const SparsifyParams& params);

/// f(u) = min(c ln Delta, d_C(u)).
std::vector<double> bounded_f(const Graph& g, const VertexSet& code, double c);

/// f(u) <= d_C(u) for all u, and f(u)/d_C(u) is non-increasing in d_C(u)
/// (0/0 counts as 0).
bool is_bounded(const Graph& g, const VertexSet& code, std::span<const double> f);

/// (f(u)/d_C(u) + f(v)/d_C(v)) / 4, a term with d_C = 0 contributing 0.
double edge_deletion_probability(double fu, std::size_t dcu, double fv, std::size_t dcv);

struct SampledSubgraph {
  Graph subgraph;
  std::vector<Edge> deleted;
};

/// Keeps every edge with no endpoint in the code and deletes each
/// code-incident edge uv independently with edge_deletion_probability.
/// Draws follow g.edges() order. Throws std::invalid_argument if some
/// probability exceeds 1/2, i.e. f is not bounded.
SampledSubgraph sample_subgraph(const Graph& g, const VertexSet& code, std::span<const double> f,
                                std::uint64_t seed);

enum class EventKind {
  kDegreeDeviation,  // |d_C(w) - d(w) p| >= d(w) p / 2 for w in {u, v}
  kUnseparated,      // N_h[u] ∩ C = N_h[v] ∩ C
};

struct EventViolation {
  EventKind kind;
  Vertex u;
  Vertex v;
  friend bool operator==(const EventViolation&, const EventViolation&) = default;
};

/// Bad events over the distance-2 pairs of g, ordered by pair with the degree
/// event first. Degrees d and d_C are taken in g; p = min(1, c ln Delta /
/// delta). Empty iff every pair is clean.
std::vector<EventViolation> check_events(const Graph& g, const Graph& h, const VertexSet& code,
                                         double c);

namespace reference {
std::vector<EventViolation> check_events(const Graph& g, const Graph& h, const VertexSet& code,
                                         double c);
}  // namespace reference

/// Random code, random subgraph and bad-event gate, retried per connected
/// component with seeds derive_seed(seed, component, trial) until the gate
/// passes (components are independent, so this samples the same conditional
/// law as redrawing the whole graph). D is the greedy dominating set of G,
/// recomputed on G \ F for components where deletions broke domination.
/// The final code is verified on G \ F before returning.
///
/// Throws DegenerateGraphError, InfeasibleProbabilityError,
/// RetriesExhaustedError.
SparsifyResult sparsify_weighted(const Graph& g, const SparsifyParams& params);

/// Same loop for the uniform variant; the gate is the identifying-code check
/// of C ∪ D on the sampled component.
SparsifyResult sparsify_uniform(const Graph& g, const SparsifyParams& params);

/// Dispatches on params.variant.
SparsifyResult sparsify(const Graph& g, const SparsifyParams& params);

}  // namespace idcodes
