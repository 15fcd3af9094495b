#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"
#include "idcodes/sparsify.hpp"

namespace idcodes {

enum class ExperimentKind {
  kSparsify,   // sparsify every sweep graph, one row per trial
  kGnpGreedy,  // greedy code size on G(n, p) against the predicted size
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kSparsify;
  std::vector<FamilySpec> sweep;
  SparsifyParams params;  // params.seed is the master seed
  std::uint32_t trials = 1;
  std::string output_path;  // empty: caller's stream
  /// When set, each successful sparsify row also writes
  /// p<point>_t<trial>.{graph,deleted,code} here.
  std::optional<std::string> artifact_dir;
};

/// %.6g in the classic locale.
std::string csv_real(double value);

/// Columns: point,family,n,delta,Delta,c,seed,edges_deleted,code_size,
/// retries,norm_edges,norm_code,status, where norm_edges = |F| / (n ln Delta)
/// and norm_code = |C ∪ D| delta / (n ln Delta).
std::string sparsify_csv_header();
std::string sparsify_csv_row(std::size_t point, const std::string& family, const Graph& g,
                             const SparsifyParams& params, const SparsifyResult* result,
                             const std::string& status);

/// Columns: point,family,n,p,seed,greedy_code_size,lower_bound,prediction,
/// ratio,status, where ratio = greedy_code_size / prediction.
std::string gnp_csv_header();

/// Cliques of order delta+1, as many as bring n closest to n_target.
std::vector<FamilySpec> hdelta_sweep(const std::vector<std::size_t>& deltas, std::size_t n_target);

/// Seed of trial t: master XOR t.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint32_t trial) { return master ^ trial; }

/// Writes the CSV (header plus one row per (point, trial)) to `out`. Trials
/// of a point run concurrently; rows are emitted in (point, trial) order and
/// flushed after each point. A failed trial yields a row with its status and
/// empty measurements. Throws std::invalid_argument on an invalid config.
void run_experiment(const ExperimentConfig& config, std::ostream& out);

/// Same, to config.output_path.
void run_experiment(const ExperimentConfig& config);

}  // namespace idcodes
