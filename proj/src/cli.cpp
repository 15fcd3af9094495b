#include "idcodes/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <locale>
#include <map>
#include <optional>
#include <sstream>

#include "idcodes/bounds.hpp"
#include "idcodes/codes.hpp"
#include "idcodes/complement_code.hpp"
#include "idcodes/experiment.hpp"
#include "idcodes/graph.hpp"
#include "idcodes/solvers.hpp"
#include "idcodes/sparsify.hpp"
#include "idcodes/watching.hpp"

namespace idcodes {

namespace {

// Thrown for unreadable files and inconsistent flags; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t delta = 0;
  std::size_t cliques = 0;
  double p = 0.5;
  std::uint64_t graph_seed = 0;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("--graph", opts.file, "Edge-list file");
  cmd->add_option("--family", opts.family, "Generated family")
      ->check(CLI::IsMember({"path", "cycle", "star", "complete", "bipartite", "hdelta",
                             "connected-cliques", "gnp"}));
  cmd->add_option("--n", opts.n, "Order (gnp, path, cycle, complete) or leaves (star)");
  cmd->add_option("--r", opts.r, "First part of a complete bipartite graph");
  cmd->add_option("--s", opts.s, "Second part of a complete bipartite graph");
  cmd->add_option("--delta", opts.delta, "Clique degree for hdelta and connected-cliques");
  cmd->add_option("--cliques", opts.cliques, "Number of cliques");
  cmd->add_option("--p", opts.p, "Edge probability for gnp");
  cmd->add_option("--graph-seed", opts.graph_seed, "Seed for gnp");
}

FamilySpec family_spec(const GraphOptions& opts) {
  const std::string& f = opts.family;
  if (f == "path") return FamilySpec::path(opts.n);
  if (f == "cycle") return FamilySpec::cycle(opts.n);
  if (f == "star") return FamilySpec::star(opts.n);
  if (f == "complete") return FamilySpec::complete(opts.n);
  if (f == "bipartite") return FamilySpec::complete_bipartite(opts.r, opts.s);
  if (f == "hdelta") return FamilySpec::disjoint_cliques(opts.delta, opts.cliques);
  if (f == "connected-cliques") return FamilySpec::connected_cliques(opts.delta, opts.cliques);
  return FamilySpec::gnp(opts.n, opts.p, opts.graph_seed);
}

Graph load_graph(const GraphOptions& opts) {
  if (!opts.file.empty() && !opts.family.empty()) throw UsageError("give --graph or --family, not both");
  if (!opts.file.empty()) {
    std::ifstream in(opts.file);
    if (!in) throw UsageError("cannot open " + opts.file);
    return read_edge_list(in);
  }
  if (!opts.family.empty()) return generate(family_spec(opts));
  // No flag: read the graph from standard input.
  return read_edge_list(std::cin);
}

VertexSet load_set(const std::string& path, std::size_t universe) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_vertex_set(in, universe);
}

// Writes through `write` to `path`, or to `out` when path is empty.
template <typename Write>
void emit(const std::string& path, std::ostream& out, Write&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  write(file);
  if (!file) throw UsageError("write to " + path + " failed");
}

void print_set(std::ostream& out, const VertexSet& set) {
  out << set.size() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set.members()[i];
  out << '\n';
}

SparsifyVariant parse_variant(const std::string& name) {
  return name == "uniform" ? SparsifyVariant::kUniform : SparsifyVariant::kWeighted;
}

struct SparsifyOptions {
  std::uint64_t seed = 0;
  double c = 66.0;
  std::uint32_t max_retries = 1000;
  std::string variant = "weighted";
  bool no_clamp = false;

  SparsifyParams params() const {
    SparsifyParams p;
    p.seed = seed;
    p.c = c;
    p.max_retries = max_retries;
    p.variant = parse_variant(variant);
    p.clamp = !no_clamp;
    return p;
  }
};

void add_sparsify_options(CLI::App* cmd, SparsifyOptions& opts) {
  cmd->add_option("--seed", opts.seed, "Master seed");
  cmd->add_option("--const-c", opts.c, "Constant c in c ln(Delta) / delta");
  cmd->add_option("--max-retries", opts.max_retries, "Sampling rounds per component")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--variant", opts.variant, "weighted (alias theorem1) or uniform")
      ->check(CLI::IsMember({"weighted", "theorem1", "uniform"}));
  cmd->add_flag("--no-clamp", opts.no_clamp, "Fail instead of clamping the probability to 1");
}

void write_trace(std::ostream& out, const std::vector<TrialDiagnostics>& trials) {
  out << "trial,code_size,deleted,a_violations,b_violations\n";
  for (const auto& t : trials) {
    out << t.trial << ',' << t.code_size << ',' << t.deleted << ',' << t.a_violations << ','
        << t.b_violations << '\n';
  }
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad list entry '" + item + "'");
    }
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identifying codes: verification, solvers, sparsification, watching systems"};
  app.require_subcommand(1);

  GraphOptions graph;
  SparsifyOptions sp;
  std::string out_path;
  std::string format = "edgelist";
  std::string code_path;
  std::string mode = "full";
  std::string property = "idcode";
  std::uint64_t budget = kDefaultNodeBudget;
  bool dominating = false;
  std::string trace_path;
  std::string deleted_path;

  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  add_graph_options(gen, graph);
  gen->add_option("--format", format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot"}));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a code against a graph");
  add_graph_options(verify, graph);
  verify->add_option("--code", code_path, "Vertex-set file")->required();
  verify->add_option("--mode", mode, "full or dist2")->check(CLI::IsMember({"full", "dist2"}));
  verify->add_option("--property", property, "idcode, dominating or locating")
      ->check(CLI::IsMember({"idcode", "dominating", "locating"}));

  auto* solve = app.add_subcommand("solve", "Exact minimum identifying code (n <= 64)");
  add_graph_options(solve, graph);
  solve->add_option("--budget", budget, "Search node budget");
  solve->add_flag("--dominating", dominating, "Solve minimum domination instead");
  solve->add_option("--out", out_path, "Also write the code to this file");

  auto* greedy = app.add_subcommand("greedy", "Greedy identifying code");
  add_graph_options(greedy, graph);
  greedy->add_flag("--dominating", dominating, "Greedy dominating set instead");
  greedy->add_option("--out", out_path, "Also write the code to this file");

  auto* sparsify_cmd = app.add_subcommand("sparsify", "Random spanning subgraph with a small code");
  add_graph_options(sparsify_cmd, graph);
  add_sparsify_options(sparsify_cmd, sp);
  sparsify_cmd->add_option("--out", out_path, "Write C ∪ D to this file");
  sparsify_cmd->add_option("--deleted", deleted_path, "Write the deleted edges to this file");
  sparsify_cmd->add_option("--trace", trace_path, "Write per-round diagnostics CSV to this file");

  auto* comp = app.add_subcommand("complement-code", "Identifying code of the complement");
  add_graph_options(comp, graph);
  comp->add_option("--code", code_path, "Identifying code of the graph (default: minimum)");
  comp->add_option("--out", out_path, "Also write the code to this file");

  std::string method = "binary";
  std::string dominating_path;
  auto* watch = app.add_subcommand("watch", "Build and verify a watching system");
  add_graph_options(watch, graph);
  add_sparsify_options(watch, sp);
  watch->add_option("--method", method, "binary or sparsify")
      ->check(CLI::IsMember({"binary", "sparsify"}));
  watch->add_option("--dominating-set", dominating_path, "Dominating set for binary (default: greedy)");

  std::string op;
  double x = 0.0;
  double n_value = 0.0;
  double p_value = 0.5;
  unsigned r_value = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a bound");
  bounds_cmd
      ->add_option("--op", op, "idcode-lower, chernoff, alpha0, sparse-edge, clique-deletion, "
                               "gnp-prediction, bipartite, sensitivity, watch")
      ->required()
      ->check(CLI::IsMember({"idcode-lower", "chernoff", "alpha0", "sparse-edge", "clique-deletion",
                             "gnp-prediction", "bipartite", "sensitivity", "watch"}));
  bounds_cmd->add_option("--x", x, "eps for chernoff, m for alpha0/sparse-edge/clique-deletion");
  bounds_cmd->add_option("--n", n_value, "Order");
  bounds_cmd->add_option("--p", p_value, "Edge probability");
  bounds_cmd->add_option("--r", r_value, "Bipartite part size");
  GraphOptions watch_graph;
  bounds_cmd->add_option("--graph", watch_graph.file, "Graph for the watch bounds");

  std::string kind = "sparsify";
  std::string deltas = "7,15,31";
  std::size_t n_target = 512;
  std::string orders = "50,100";
  std::uint32_t trials = 1;
  std::string artifacts;
  auto* experiment = app.add_subcommand("experiment", "Run a sweep and write CSV");
  experiment->add_option("--kind", kind, "sparsify or gnp")->check(CLI::IsMember({"sparsify", "gnp"}));
  experiment->add_option("--deltas", deltas, "Comma-separated clique degrees (sparsify)");
  experiment->add_option("--n-target", n_target, "Approximate order of each sweep graph (sparsify)");
  experiment->add_option("--orders", orders, "Comma-separated orders (gnp)");
  experiment->add_option("--p", p_value, "Edge probability (gnp)");
  experiment->add_option("--trials", trials, "Trials per sweep point")->check(CLI::PositiveNumber);
  experiment->add_option("--out", out_path, "CSV file (default stdout)");
  experiment->add_option("--artifacts", artifacts, "Directory for graph, deleted edges and code files");
  add_sparsify_options(experiment, sp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::locale::global(std::locale::classic());
  out.imbue(std::locale::classic());

  try {
    if (*gen) {
      const Graph g = load_graph(graph);
      emit(out_path, out, [&](std::ostream& o) {
        if (format == "dot") {
          write_dot(o, g);
        } else {
          write_edge_list(o, g);
        }
      });
    } else if (*verify) {
      const Graph g = load_graph(graph);
      const VertexSet code = load_set(code_path, g.order());
      if (property != "dominating" && property != "locating") {
        if (const auto twins = find_twins(g); !twins.empty()) {
          out << "not twin-free: twins " << twins.front().u << ' ' << twins.front().v << '\n';
          return kExitFailed;
        }
      }
      Verdict verdict;
      if (property == "dominating") {
        verdict = is_dominating(g, code);
      } else if (property == "locating") {
        verdict = is_locating_dominating(g, code);
      } else {
        verdict = is_identifying_code(g, code, mode == "dist2" ? CheckMode::kDist2 : CheckMode::kFull);
      }
      out << describe(verdict) << '\n';
      return verdict ? kExitOk : kExitFailed;
    } else if (*solve) {
      const Graph g = load_graph(graph);
      const SolveResult result = dominating ? exact_min_dominating(g, budget) : exact_min_idcode(g, budget);
      print_set(out, result.code);
      if (result.status == SolveStatus::kBudgetExceeded) {
        err << "budget of " << budget << " nodes exceeded; size is an upper bound\n";
      }
      if (!out_path.empty()) emit(out_path, out, [&](std::ostream& o) { write_vertex_set(o, result.code); });
    } else if (*greedy) {
      const Graph g = load_graph(graph);
      const VertexSet code = dominating ? greedy_dominating(g) : greedy_idcode(g);
      print_set(out, code);
      if (!out_path.empty()) emit(out_path, out, [&](std::ostream& o) { write_vertex_set(o, code); });
    } else if (*sparsify_cmd) {
      const Graph g = load_graph(graph);
      const SparsifyParams params = sp.params();
      const SparsifyResult result = sparsify(g, params);
      out << sparsify_csv_header() << '\n';
      const std::string family = graph.family.empty() ? graph.file : to_string(family_spec(graph));
      out << sparsify_csv_row(0, family, g, params, &result, "ok") << '\n';
      if (!out_path.empty()) {
        emit(out_path, out, [&](std::ostream& o) { write_vertex_set(o, result.final_code); });
      }
      if (!deleted_path.empty()) {
        emit(deleted_path, out, [&](std::ostream& o) { write_edge_list(o, Graph(g.order(), result.deleted)); });
      }
      if (!trace_path.empty()) emit(trace_path, out, [&](std::ostream& o) { write_trace(o, result.trials); });
    } else if (*comp) {
      const Graph g = load_graph(graph);
      std::optional<VertexSet> c0;
      if (!code_path.empty()) c0 = load_set(code_path, g.order());
      const VertexSet code = complement_code(g, c0);
      print_set(out, code);
      if (!out_path.empty()) emit(out_path, out, [&](std::ostream& o) { write_vertex_set(o, code); });
    } else if (*watch) {
      const Graph g = load_graph(graph);
      WatchingSystem system;
      if (method == "sparsify") {
        const SparsifyResult result = sparsify(g, sp.params());
        system = watching_from_subgraph_code(g, result.subgraph, result.final_code);
      } else {
        const VertexSet d = dominating_path.empty() ? greedy_dominating(g) : load_set(dominating_path, g.order());
        system = watching_binary(g, d);
      }
      const Verdict verdict = verify_watching(g, system);
      out << "watchers " << system.size() << '\n';
      for (const Watcher& w : system.watchers) {
        out << w.host << ':';
        for (Vertex v : w.zone) out << ' ' << v;
        out << '\n';
      }
      out << describe(verdict) << '\n';
      return verdict ? kExitOk : kExitFailed;
    } else if (*bounds_cmd) {
      bounds::BoundReport report;
      report.name = op;
      if (op == "idcode-lower") {
        report.inputs = {{"n", n_value}};
        report.value = bounds::idcode_lower_bound(static_cast<std::uint64_t>(n_value));
      } else if (op == "chernoff") {
        report.inputs = {{"eps", x}};
        report.value = bounds::chernoff_constant(x);
      } else if (op == "alpha0") {
        report.inputs = {{"m", x}};
        report.value = bounds::alpha0(x);
      } else if (op == "sparse-edge") {
        report.inputs = {{"m", x}};
        report.value = bounds::sparse_edge_threshold(x);
      } else if (op == "clique-deletion") {
        report.inputs = {{"m", x}};
        report.value = bounds::clique_deletion_threshold(x);
      } else if (op == "gnp-prediction") {
        report.inputs = {{"n", n_value}, {"p", p_value}};
        report.value = bounds::gnp_idcode_prediction(n_value, p_value);
      } else if (op == "bipartite") {
        report.inputs = {{"r", static_cast<double>(r_value)}};
        report.value = bounds::bipartite_subgraph_bound(r_value);
      } else if (op == "sensitivity") {
        report.value = static_cast<std::uint64_t>(bounds::edge_deletion_sensitivity_bound());
      } else {
        if (watch_graph.file.empty()) throw UsageError("--op watch needs --graph");
        const WatchBounds wb = watch_bounds(load_graph(watch_graph));
        out << "watch lower=" << wb.lower << " upper=" << wb.upper << " gamma=" << wb.gamma
            << (wb.gamma_exact ? " exact" : " greedy") << '\n';
        return kExitOk;
      }
      out << bounds::format(report) << '\n';
    } else if (*experiment) {
      ExperimentConfig config;
      config.trials = trials;
      config.params = sp.params();
      if (!artifacts.empty()) config.artifact_dir = artifacts;
      if (kind == "gnp") {
        config.kind = ExperimentKind::kGnpGreedy;
        for (std::size_t n : parse_list(orders)) config.sweep.push_back(FamilySpec::gnp(n, p_value, 0));
      } else {
        config.sweep = hdelta_sweep(parse_list(deltas), n_target);
      }
      if (out_path.empty()) {
        run_experiment(config, out);
      } else {
        config.output_path = out_path;
        try {
          run_experiment(config);
        } catch (const std::runtime_error& e) {
          throw UsageError(e.what());
        }
      }
    }
  } catch (const NotTwinFreeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const ComplementNotTwinFreeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const RetriesExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const NotDominatingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const InvalidCodeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::logic_error& e) {
    // invalid_argument and friends: the request itself is malformed.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace idcodes
