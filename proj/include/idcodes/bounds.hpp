#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace idcodes::bounds {

// Logarithms are natural unless the name says log2.

/// ceil(log2(n + 1)); the minimum size of an identifying code of any
/// twin-free graph on n >= 1 vertices with an edge.
std::uint64_t idcode_lower_bound(std::uint64_t n);

/// min{(1+eps) ln(1+eps) - eps, eps^2 / 2}, the exponent constant of the
/// two-sided Chernoff tail 2 exp(-c_eps * mean). Requires eps > 0.
double chernoff_constant(double eps);

/// The function whose smallest positive root is alpha0:
///   alpha * ln((m + alpha) e / alpha) - 1/2.
double alpha_equation(double m, double alpha);

/// Smallest positive root of alpha_equation(m, .), by bisection on (0, 1]
/// to an absolute tolerance below 1e-9. Requires m >= 0.
double alpha0(double m);

/// c0 = alpha0(m) / 4: a graph whose identifying code number is at most
/// m ln n has at least c0 n ln n edges.
double sparse_edge_threshold(double m);

/// Edge-deletion threshold for K_n \ F to reach an identifying code of size
/// at most m ln n. The complement of K_n \ F then has a code of size at most
/// 2 m ln n, so the sparse-graph threshold is taken at 2m.
double clique_deletion_threshold(double m);

/// 2 ln n / ln(1/q) with q = p^2 + (1-p)^2, the leading term of the
/// identifying code number of G(n, p). Requires 0 < p < 1, n >= 2.
double gnp_idcode_prediction(double n, double p);

/// 2^(2r) - 2^r, the least code size over twin-free spanning subgraphs of
/// K_{r, 2^(2r)}. Requires 1 <= r <= 31.
std::uint64_t bipartite_subgraph_bound(unsigned r);

/// Removing one edge lowers the identifying code number by at most this.
constexpr int edge_deletion_sensitivity_bound() { return 2; }

/// ceil(log2(x)) for x >= 1.
std::uint64_t ceil_log2(std::uint64_t x);

struct BoundReport {
  std::string name;
  std::variant<std::uint64_t, double> value;
  std::vector<std::pair<std::string, double>> inputs;
};

std::string format(const BoundReport& report);

}  // namespace idcodes::bounds
