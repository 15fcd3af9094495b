#include "idcodes/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace idcodes::bounds {

std::uint64_t ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2(0)");
  std::uint64_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < x) ++k;
  return k;
}

std::uint64_t idcode_lower_bound(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("idcode_lower_bound needs n >= 1");
  return ceil_log2(n + 1);
}

double chernoff_constant(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("chernoff_constant needs eps > 0");
  // log1p keeps the first branch accurate as eps -> 0.
  const double tail = (1.0 + eps) * std::log1p(eps) - eps;
  return std::min(tail, eps * eps / 2.0);
}

double alpha_equation(double m, double alpha) {
  return alpha * (std::log((m + alpha) / alpha) + 1.0) - 0.5;
}

double alpha0(double m) {
  if (!(m >= 0.0)) throw std::invalid_argument("alpha0 needs m >= 0");
  // The function tends to -1/2 at 0+, is positive at 1 and strictly increasing.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_equation(m, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sparse_edge_threshold(double m) { return alpha0(m) / 4.0; }

double clique_deletion_threshold(double m) { return sparse_edge_threshold(2.0 * m); }

double gnp_idcode_prediction(double n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("gnp prediction needs 0 < p < 1");
  if (!(n >= 2.0)) throw std::invalid_argument("gnp prediction needs n >= 2");
  const double q = p * p + (1.0 - p) * (1.0 - p);
  return 2.0 * std::log(n) / std::log(1.0 / q);
}

std::uint64_t bipartite_subgraph_bound(unsigned r) {
  if (r < 1 || r > 31) throw std::invalid_argument("bipartite_subgraph_bound needs 1 <= r <= 31");
  return (std::uint64_t{1} << (2 * r)) - (std::uint64_t{1} << r);
}

std::string format(const BoundReport& report) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(10);
  out << report.name;
  for (const auto& [key, value] : report.inputs) out << ' ' << key << '=' << value;
  out << " value=";
  std::visit([&](auto v) { out << v; }, report.value);
  return out.str();
}

}  // namespace idcodes::bounds
