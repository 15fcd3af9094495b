#include "idcodes/sparsify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>

#include "idcodes/codes.hpp"
#include "idcodes/random.hpp"
#include "idcodes/solvers.hpp"

namespace idcodes {

RetriesExhaustedError::RetriesExhaustedError(std::size_t comp, TrialDiagnostics last)
    : std::runtime_error("sparsify: retries exhausted on component " + std::to_string(comp) +
                         " after " + std::to_string(last.trial + 1) + " trials (last trial: " +
                         std::to_string(last.a_violations) + " degree violations, " +
                         std::to_string(last.b_violations) + " unseparated pairs)"),
      component(comp),
      last_trial(last) {}

namespace {

// Quantities fixed by the whole input graph and shared by every component.
struct Regime {
  double p = 0.0;    // inclusion probability of C
  double cap = 0.0;  // c ln Delta, the ceiling of f
};

void require_nondegenerate(const Graph& g, bool need_delta_two) {
  if (g.order() == 0) throw DegenerateGraphError("sparsify: empty graph");
  const DegreeStats stats = degree_stats(g);
  if (stats.min_degree == 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        throw DegenerateGraphError("sparsify: vertex " + std::to_string(v) + " is isolated");
      }
    }
  }
  if (need_delta_two && stats.max_degree < 2) {
    throw DegenerateGraphError("sparsify: maximum degree must be at least 2");
  }
}

std::vector<std::size_t> code_degrees(const Graph& g, const std::vector<char>& in_code) {
  std::vector<std::size_t> dc(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) dc[v] += in_code[w] ? 1 : 0;
  }
  return dc;
}

std::vector<char> draw_code(std::size_t n, double p, Rng& rng) {
  std::vector<char> in_code(n, 0);
  for (std::size_t v = 0; v < n; ++v) in_code[v] = rng.bernoulli(p) ? 1 : 0;
  return in_code;
}

double ratio(double f, std::size_t dc) { return dc == 0 ? 0.0 : f / static_cast<double>(dc); }

// Deletes code-incident edges in g.edges() order; `prob(u, v)` gives the
// deletion probability of edge uv.
template <typename Prob>
std::vector<Edge> draw_deletions(const Graph& g, const std::vector<char>& in_code, Rng& rng,
                                 Prob&& prob) {
  std::vector<Edge> deleted;
  for (const Edge& e : g.edges()) {
    if (!in_code[e.u] && !in_code[e.v]) continue;
    if (rng.bernoulli(prob(e.u, e.v))) deleted.push_back(e);
  }
  return deleted;
}

std::vector<double> f_values(const std::vector<std::size_t>& dc, double cap) {
  std::vector<double> f(dc.size());
  for (std::size_t v = 0; v < dc.size(); ++v) f[v] = std::min(cap, static_cast<double>(dc[v]));
  return f;
}

bool deviates(std::size_t degree, std::size_t dc, double p) {
  const double expected = static_cast<double>(degree) * p;
  return std::abs(static_cast<double>(dc) - expected) >= expected / 2.0;
}

// Traces N_h[v] ∩ C as sorted lists.
std::vector<std::vector<Vertex>> code_traces(const Graph& h, const std::vector<char>& in_code) {
  std::vector<std::vector<Vertex>> rows(h.order());
  const auto n = static_cast<std::int64_t>(h.order());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    auto& row = rows[v];
    for (Vertex w : h.closed_neighborhood(static_cast<Vertex>(v))) {
      if (in_code[w]) row.push_back(w);
    }
  }
  return rows;
}

// Event scan over the distance-2 pairs of g; `bad_a` marks deviating
// vertices, rows are the traces being compared.
struct EventCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  bool clean() const { return a == 0 && b == 0; }
};

template <typename Emit>
void scan_events(const Graph& g, const std::vector<char>& bad_a,
                 const std::vector<std::vector<Vertex>>& rows, Vertex u, std::vector<char>& seen,
                 std::vector<Vertex>& touched, Emit&& emit) {
  for_each_dist2_pair(g, u, seen, touched, [&](Vertex a, Vertex b) {
    if (bad_a[a] || bad_a[b]) emit(EventViolation{EventKind::kDegreeDeviation, a, b});
    if (rows[a] == rows[b]) emit(EventViolation{EventKind::kUnseparated, a, b});
  });
}

std::vector<char> deviating(const Graph& g, const std::vector<std::size_t>& dc, double p) {
  std::vector<char> bad(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) bad[v] = deviates(g.degree(v), dc[v], p) ? 1 : 0;
  return bad;
}

EventCounts count_events(const Graph& g, const std::vector<char>& bad_a,
                         const std::vector<std::vector<Vertex>>& rows) {
  EventCounts counts;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < g.order(); ++u) {
    scan_events(g, bad_a, rows, u, seen, touched, [&](const EventViolation& e) {
      (e.kind == EventKind::kDegreeDeviation ? counts.a : counts.b) += 1;
    });
  }
  return counts;
}

Regime weighted_regime(const Graph& g, const SparsifyParams& params) {
  const DegreeStats stats = degree_stats(g);
  Regime regime;
  regime.cap = params.c * std::log(static_cast<double>(stats.max_degree));
  regime.p = code_probability(g, params);
  return regime;
}

std::vector<char> component_dominating(const Graph& comp, const Graph& h) {
  VertexSet d = greedy_dominating(comp);
  if (!is_dominating(h, d)) d = greedy_dominating(h);
  return d.mask();
}

struct TrialOutcome {
  std::vector<char> in_code;
  std::vector<char> in_dominating;
  std::vector<Edge> deleted;
  TrialDiagnostics diag;
  bool ok = false;
};

TrialOutcome weighted_trial(const Graph& comp, const Regime& regime, Rng& rng) {
  TrialOutcome out;
  out.in_code = draw_code(comp.order(), regime.p, rng);
  const auto dc = code_degrees(comp, out.in_code);
  const auto f = f_values(dc, regime.cap);
  out.deleted = draw_deletions(comp, out.in_code, rng, [&](Vertex u, Vertex v) {
    return edge_deletion_probability(f[u], dc[u], f[v], dc[v]);
  });
  const Graph h = comp.without_edges(out.deleted);
  const auto counts = count_events(comp, deviating(comp, dc, regime.p), code_traces(h, out.in_code));
  out.diag.code_size = static_cast<std::size_t>(std::count(out.in_code.begin(), out.in_code.end(), 1));
  out.diag.deleted = out.deleted.size();
  out.diag.a_violations = counts.a;
  out.diag.b_violations = counts.b;
  out.ok = counts.clean();
  if (out.ok) out.in_dominating = component_dominating(comp, h);
  return out;
}

TrialOutcome uniform_trial(const Graph& comp, double p, Rng& rng) {
  TrialOutcome out;
  out.in_code = draw_code(comp.order(), p, rng);
  out.deleted = draw_deletions(comp, out.in_code, rng, [](Vertex, Vertex) { return 0.25; });
  const Graph h = comp.without_edges(out.deleted);
  out.in_dominating = component_dominating(comp, h);
  std::vector<char> final_code(comp.order());
  for (std::size_t v = 0; v < comp.order(); ++v) final_code[v] = out.in_code[v] | out.in_dominating[v];
  const std::vector<char> no_deviation(comp.order(), 0);
  const auto counts = count_events(comp, no_deviation, code_traces(h, final_code));
  out.diag.code_size = static_cast<std::size_t>(std::count(out.in_code.begin(), out.in_code.end(), 1));
  out.diag.deleted = out.deleted.size();
  out.diag.b_violations = counts.b;
  out.ok = counts.clean();
  return out;
}

struct ComponentRun {
  TrialOutcome accepted;
  std::vector<TrialDiagnostics> history;
};

SparsifyResult run_sparsify(const Graph& g, const SparsifyParams& params) {
  if (!(params.c > 0.0)) throw std::invalid_argument("sparsify: constant c must be positive");
  if (params.max_retries < 1) throw std::invalid_argument("sparsify: max_retries must be >= 1");
  require_nondegenerate(g, true);
  const bool uniform = params.variant == SparsifyVariant::kUniform;
  const Regime regime = weighted_regime(g, params);

  const auto components = connected_components(g);
  const auto count = static_cast<std::int64_t>(components.size());
  std::vector<ComponentRun> runs(components.size());
  std::vector<std::exception_ptr> errors(components.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < count; ++j) {
    try {
      const Graph local = induced_subgraph(g, components[j]);
      auto& run = runs[j];
      for (std::uint32_t t = 0; t < params.max_retries; ++t) {
        Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(j), t));
        TrialOutcome outcome = uniform ? uniform_trial(local, regime.p, rng)
                                       : weighted_trial(local, regime, rng);
        outcome.diag.trial = t;
        run.history.push_back(outcome.diag);
        if (outcome.ok) {
          run.accepted = std::move(outcome);
          break;
        }
      }
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (std::size_t j = 0; j < runs.size(); ++j) {
    if (errors[j]) std::rethrow_exception(errors[j]);
    if (!runs[j].accepted.ok) throw RetriesExhaustedError(j, runs[j].history.back());
  }

  const std::size_t n = g.order();
  std::vector<char> in_code(n, 0);
  std::vector<char> in_dominating(n, 0);
  SparsifyResult result;
  std::size_t rounds = 0;
  for (std::size_t j = 0; j < runs.size(); ++j) {
    const auto& vertices = components[j];
    const auto& accepted = runs[j].accepted;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      in_code[vertices[i]] = accepted.in_code[i];
      in_dominating[vertices[i]] = accepted.in_dominating[i];
    }
    for (const Edge& e : accepted.deleted) result.deleted.emplace_back(vertices[e.u], vertices[e.v]);
    rounds = std::max(rounds, runs[j].history.size());
  }
  std::sort(result.deleted.begin(), result.deleted.end());

  for (std::size_t t = 0; t < rounds; ++t) {
    TrialDiagnostics round;
    round.trial = static_cast<std::uint32_t>(t);
    for (const auto& run : runs) {
      const auto& d = run.history[std::min(t, run.history.size() - 1)];
      round.code_size += d.code_size;
      round.deleted += d.deleted;
      round.a_violations += d.a_violations;
      round.b_violations += d.b_violations;
    }
    result.trials.push_back(round);
  }

  result.code = VertexSet::from_mask(in_code);
  result.dominating = VertexSet::from_mask(in_dominating);
  result.final_code = result.code.united(result.dominating);
  result.subgraph = g.without_edges(result.deleted);
  result.retries_used = static_cast<std::uint32_t>(rounds);
  result.probability = regime.p;
  if (!is_identifying_code(result.subgraph, result.final_code, CheckMode::kFull)) {
    throw std::logic_error("sparsify: accepted sample failed identifying-code verification");
  }

  const DegreeStats stats = degree_stats(g);
  result.stats.deleted = result.deleted.size();
  result.stats.code_size = result.final_code.size();
  result.stats.n_log_delta = static_cast<double>(n) * std::log(static_cast<double>(stats.max_degree));
  result.stats.n_log_delta_over_delta = result.stats.n_log_delta / static_cast<double>(stats.min_degree);
  return result;
}

}  // namespace

double code_probability(const Graph& g, const SparsifyParams& params) {
  if (!(params.c > 0.0)) throw std::invalid_argument("constant c must be positive");
  const DegreeStats stats = degree_stats(g);
  if (stats.min_degree == 0) throw DegenerateGraphError("minimum degree is 0");
  const double scale = params.variant == SparsifyVariant::kUniform
                           ? std::log(static_cast<double>(g.order()))
                           : std::log(static_cast<double>(stats.max_degree));
  const double p = params.c * scale / static_cast<double>(stats.min_degree);
  if (!params.clamp && p > 1.0) {
    throw InfeasibleProbabilityError("inclusion probability " + std::to_string(p) +
                                     " exceeds 1; raise the minimum degree or enable clamping");
  }
  return std::clamp(p, 0.0, 1.0);
}

VertexSet pick_code(const Graph& g, const SparsifyParams& params) {
  const double p = code_probability(g, params);
  Rng rng(params.seed);
  return VertexSet::from_mask(draw_code(g.order(), p, rng));
}

std::vector<double> bounded_f(const Graph& g, const VertexSet& code, double c) {
  const double cap = g.order() == 0 ? 0.0 : c * std::log(static_cast<double>(std::max<std::size_t>(1, degree_stats(g).max_degree)));
  return f_values(code_degrees(g, code.mask()), cap);
}

bool is_bounded(const Graph& g, const VertexSet& code, std::span<const double> f) {
  if (f.size() != g.order()) return false;
  const auto dc = code_degrees(g, code.mask());
  constexpr double kTol = 1e-12;
  // Ratios grouped by d_C: equal within a group, non-increasing across.
  std::vector<std::pair<std::size_t, double>> ratios;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] < 0.0 || f[v] > static_cast<double>(dc[v]) + kTol) return false;
    if (dc[v] > 0) ratios.emplace_back(dc[v], f[v] / static_cast<double>(dc[v]));
  }
  std::sort(ratios.begin(), ratios.end());
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    const auto& [d0, r0] = ratios[i - 1];
    const auto& [d1, r1] = ratios[i];
    if (d0 == d1 && std::abs(r1 - r0) > kTol) return false;
  }
  double floor_of_smaller = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ratios.size();) {
    std::size_t j = i;
    while (j < ratios.size() && ratios[j].first == ratios[i].first) ++j;
    if (ratios[i].second > floor_of_smaller + kTol) return false;
    floor_of_smaller = std::min(floor_of_smaller, ratios[i].second);
    i = j;
  }
  return true;
}

double edge_deletion_probability(double fu, std::size_t dcu, double fv, std::size_t dcv) {
  return (ratio(fu, dcu) + ratio(fv, dcv)) / 4.0;
}

SampledSubgraph sample_subgraph(const Graph& g, const VertexSet& code, std::span<const double> f,
                                std::uint64_t seed) {
  if (f.size() != g.order()) throw std::invalid_argument("sample_subgraph: f has wrong length");
  const auto in_code = code.mask();
  if (in_code.size() != g.order()) throw std::invalid_argument("sample_subgraph: code universe mismatch");
  const auto dc = code_degrees(g, in_code);
  Rng rng(seed);
  auto deleted = draw_deletions(g, in_code, rng, [&](Vertex u, Vertex v) {
    const double p = edge_deletion_probability(f[u], dc[u], f[v], dc[v]);
    if (p > 0.5 + 1e-12) {
      throw std::invalid_argument("sample_subgraph: f is not bounded (p_uv = " + std::to_string(p) + ")");
    }
    return p;
  });
  Graph h = g.without_edges(deleted);
  return {std::move(h), std::move(deleted)};
}

namespace {

double event_probability(const Graph& g, double c) {
  const DegreeStats stats = degree_stats(g);
  if (stats.min_degree == 0) return 1.0;
  return std::min(1.0, c * std::log(static_cast<double>(stats.max_degree)) /
                           static_cast<double>(stats.min_degree));
}

}  // namespace

std::vector<EventViolation> check_events(const Graph& g, const Graph& h, const VertexSet& code,
                                         double c) {
  if (!is_spanning_subgraph(g, h)) throw std::invalid_argument("check_events: h is not a spanning subgraph of g");
  if (g.order() == 0) return {};
  const double p = event_probability(g, c);
  const auto in_code = code.mask();
  if (in_code.size() != g.order()) throw std::invalid_argument("check_events: code universe mismatch");
  const auto bad = deviating(g, code_degrees(g, in_code), p);
  const auto rows = code_traces(h, in_code);

  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<EventViolation>> per_vertex(g.order());
#pragma omp parallel
  {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> touched;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t u = 0; u < n; ++u) {
      scan_events(g, bad, rows, static_cast<Vertex>(u), seen, touched,
                  [&](const EventViolation& e) { per_vertex[u].push_back(e); });
    }
  }
  std::vector<EventViolation> all;
  for (auto& list : per_vertex) all.insert(all.end(), list.begin(), list.end());
  return all;
}

namespace reference {

std::vector<EventViolation> check_events(const Graph& g, const Graph& h, const VertexSet& code,
                                         double c) {
  std::vector<EventViolation> all;
  if (g.order() == 0) return all;
  const double p = event_probability(g, c);
  auto code_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += code.contains(w) ? 1 : 0;
    return d;
  };
  auto trace = [&](Vertex v) {
    std::vector<Vertex> row;
    for (Vertex w : h.closed_neighborhood(v)) {
      if (code.contains(w)) row.push_back(w);
    }
    return row;
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool near = g.has_edge(u, v);
      for (Vertex w : g.neighbors(u)) near = near || g.has_edge(w, v);
      if (!near) continue;
      const double eu = static_cast<double>(g.degree(u)) * p;
      const double ev = static_cast<double>(g.degree(v)) * p;
      const bool a = std::abs(static_cast<double>(code_degree(u)) - eu) >= eu / 2.0 ||
                     std::abs(static_cast<double>(code_degree(v)) - ev) >= ev / 2.0;
      if (a) all.push_back({EventKind::kDegreeDeviation, u, v});
      if (trace(u) == trace(v)) all.push_back({EventKind::kUnseparated, u, v});
    }
  }
  return all;
}

}  // namespace reference

SparsifyResult sparsify_weighted(const Graph& g, const SparsifyParams& params) {
  SparsifyParams p = params;
  p.variant = SparsifyVariant::kWeighted;
  return run_sparsify(g, p);
}

SparsifyResult sparsify_uniform(const Graph& g, const SparsifyParams& params) {
  SparsifyParams p = params;
  p.variant = SparsifyVariant::kUniform;
  return run_sparsify(g, p);
}

SparsifyResult sparsify(const Graph& g, const SparsifyParams& params) { return run_sparsify(g, params); }

}  // namespace idcodes
