#include "idcodes/experiment.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "idcodes/bounds.hpp"
#include "idcodes/solvers.hpp"

namespace idcodes {

std::string csv_real(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(6);
  out << value;
  return out.str();
}

std::string sparsify_csv_header() {
  return "point,family,n,delta,Delta,c,seed,edges_deleted,code_size,retries,norm_edges,norm_code,status";
}

std::string gnp_csv_header() {
  return "point,family,n,p,seed,greedy_code_size,lower_bound,prediction,ratio,status";
}

namespace {

// Family strings contain commas; quote them.
std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string sparsify_csv_row(std::size_t point, const std::string& family, const Graph& g,
                             const SparsifyParams& params, const SparsifyResult* result,
                             const std::string& status) {
  std::ostringstream row;
  row.imbue(std::locale::classic());
  const DegreeStats stats = degree_stats(g);
  row << point << ',' << quoted(family) << ',' << g.order() << ',' << stats.min_degree << ','
      << stats.max_degree << ',' << csv_real(params.c) << ',' << params.seed << ',';
  if (result) {
    const double n_log = result->stats.n_log_delta;
    row << result->stats.deleted << ',' << result->stats.code_size << ',' << result->retries_used
        << ',' << csv_real(static_cast<double>(result->stats.deleted) / n_log) << ','
        << csv_real(static_cast<double>(result->stats.code_size) * static_cast<double>(stats.min_degree) / n_log);
  } else {
    row << ",,,,";
  }
  row << ',' << status;
  return row.str();
}

std::vector<FamilySpec> hdelta_sweep(const std::vector<std::size_t>& deltas, std::size_t n_target) {
  std::vector<FamilySpec> sweep;
  for (std::size_t delta : deltas) {
    const std::size_t order = delta + 1;
    const std::size_t k = std::max<std::size_t>(1, (n_target + order / 2) / order);
    sweep.push_back(FamilySpec::disjoint_cliques(delta, k));
  }
  return sweep;
}

namespace {

std::string status_of(const std::exception& e) {
  if (dynamic_cast<const RetriesExhaustedError*>(&e)) return "retries_exhausted";
  if (dynamic_cast<const DegenerateGraphError*>(&e)) return "degenerate_graph";
  if (dynamic_cast<const InfeasibleProbabilityError*>(&e)) return "infeasible_probability";
  if (dynamic_cast<const NotTwinFreeError*>(&e)) return "not_twin_free";
  return "error";
}

void write_artifacts(const std::string& dir, std::size_t point, std::uint32_t trial, const Graph& g,
                     const SparsifyResult& result) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string stem = (fs::path(dir) / ("p" + std::to_string(point) + "_t" + std::to_string(trial))).string();
  std::ofstream graph_out(stem + ".graph");
  write_edge_list(graph_out, g);
  std::ofstream deleted_out(stem + ".deleted");
  write_edge_list(deleted_out, Graph(g.order(), result.deleted));
  std::ofstream code_out(stem + ".code");
  write_vertex_set(code_out, result.final_code);
  if (!graph_out || !deleted_out || !code_out) throw std::runtime_error("cannot write artifacts to " + dir);
}

std::string sparsify_trial(const ExperimentConfig& config, std::size_t point, std::uint32_t trial,
                           const Graph& g) {
  SparsifyParams params = config.params;
  params.seed = trial_seed(config.params.seed, trial);
  const std::string family = to_string(config.sweep[point]);
  try {
    SparsifyResult result = sparsify(g, params);
    if (config.artifact_dir) write_artifacts(*config.artifact_dir, point, trial, g, result);
    return sparsify_csv_row(point, family, g, params, &result, "ok");
  } catch (const std::exception& e) {
    return sparsify_csv_row(point, family, g, params, nullptr, status_of(e));
  }
}

std::string gnp_trial(const ExperimentConfig& config, std::size_t point, std::uint32_t trial) {
  FamilySpec spec = config.sweep[point];
  spec.seed = trial_seed(config.params.seed, trial);
  std::ostringstream row;
  row.imbue(std::locale::classic());
  row << point << ',' << quoted(to_string(spec)) << ',' << spec.n << ',' << csv_real(spec.p) << ','
      << spec.seed << ',';
  const double prediction = bounds::gnp_idcode_prediction(static_cast<double>(spec.n), spec.p);
  try {
    const Graph g = generate(spec);
    const std::size_t size = greedy_idcode(g).size();
    row << size << ',' << bounds::idcode_lower_bound(spec.n) << ',' << csv_real(prediction) << ','
        << csv_real(static_cast<double>(size) / prediction) << ",ok";
  } catch (const std::exception& e) {
    row << ",," << csv_real(prediction) << ",," << status_of(e);
  }
  return row.str();
}

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("experiment needs trials >= 1");
  if (config.sweep.empty()) throw std::invalid_argument("experiment needs a non-empty sweep");
  for (const FamilySpec& spec : config.sweep) {
    if (config.kind == ExperimentKind::kGnpGreedy) {
      if (spec.kind != FamilyKind::kGnp) throw std::invalid_argument("gnp experiment needs gnp sweep points");
      if (!(spec.p > 0.0 && spec.p < 1.0) || spec.n < 2) {
        throw std::invalid_argument("gnp experiment needs 0 < p < 1 and n >= 2");
      }
    }
  }
}

}  // namespace

void run_experiment(const ExperimentConfig& config, std::ostream& out) {
  validate(config);
  out << (config.kind == ExperimentKind::kSparsify ? sparsify_csv_header() : gnp_csv_header()) << '\n';
  for (std::size_t point = 0; point < config.sweep.size(); ++point) {
    std::optional<Graph> g;
    if (config.kind == ExperimentKind::kSparsify) {
      try {
        g = generate(config.sweep[point]);
      } catch (const GraphError& e) {
        throw std::invalid_argument("sweep point " + std::to_string(point) + ": " + e.what());
      }
    }
    std::vector<std::string> rows(config.trials);
    const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < trials; ++t) {
      const auto trial = static_cast<std::uint32_t>(t);
      rows[t] = config.kind == ExperimentKind::kSparsify ? sparsify_trial(config, point, trial, *g)
                                                         : gnp_trial(config, point, trial);
    }
    for (const auto& row : rows) out << row << '\n';
    out.flush();
  }
}

void run_experiment(const ExperimentConfig& config) {
  if (config.output_path.empty()) throw std::invalid_argument("experiment needs an output path");
  std::ofstream out(config.output_path);
  if (!out) throw std::runtime_error("cannot open " + config.output_path);
  run_experiment(config, out);
}

}  // namespace idcodes
