#include "idcodes/codes.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace idcodes {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void check_code(const Graph& g, const VertexSet& code) {
  if (!code.empty() && code.members().back() >= g.order()) {
    throw GraphError("code vertex " + std::to_string(code.members().back()) +
                     " outside graph of order " + std::to_string(g.order()));
  }
}

std::vector<char> code_mask(const Graph& g, const VertexSet& code) {
  std::vector<char> mask(g.order(), 0);
  for (Vertex v : code) mask[v] = 1;
  return mask;
}

std::vector<Vertex> trace(const Graph& g, const std::vector<char>& in_code, Vertex v) {
  std::vector<Vertex> row;
  bool self_done = !in_code[v];
  for (Vertex w : g.neighbors(v)) {
    if (!self_done && v < w) {
      row.push_back(v);
      self_done = true;
    }
    if (in_code[w]) row.push_back(w);
  }
  if (!self_done) row.push_back(v);
  return row;
}

std::uint64_t hash_row(const std::vector<Vertex>& row) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ row.size();
  for (Vertex v : row) {
    h ^= v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

std::vector<std::vector<Vertex>> all_traces(const Graph& g, const std::vector<char>& in_code) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<Vertex>> rows(g.order());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    rows[v] = trace(g, in_code, static_cast<Vertex>(v));
  }
  return rows;
}

Verdict dominating_from_mask(const Graph& g, const std::vector<char>& in_code) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::uint64_t first = kNone;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t v = 0; v < n; ++v) {
    if (in_code[v]) continue;
    bool dominated = false;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (in_code[w]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) first = std::min<std::uint64_t>(first, static_cast<std::uint64_t>(v));
  }
  if (first == kNone) return Verdict::pass();
  return Verdict::fail(UndominatedVertex{static_cast<Vertex>(first)});
}

// Least pair (u, v), u < v, among `candidates` with equal rows.
Verdict least_equal_pair(const std::vector<std::vector<Vertex>>& rows,
                         std::vector<Vertex> candidates) {
  std::vector<std::uint64_t> hashes(rows.size());
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    hashes[candidates[i]] = hash_row(rows[candidates[i]]);
  }
  std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
    if (hashes[a] != hashes[b]) return hashes[a] < hashes[b];
    if (rows[a] != rows[b]) return rows[a] < rows[b];
    return a < b;
  });
  std::optional<UnseparatedPair> best;
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    Vertex a = candidates[i];
    Vertex b = candidates[i + 1];
    // Only the first two of each equal run matter: they are its least pair.
    if (i > 0 && rows[candidates[i - 1]] == rows[a]) continue;
    if (rows[a] == rows[b]) {
      UnseparatedPair pair{a, b};
      if (!best || std::pair(pair.u, pair.v) < std::pair(best->u, best->v)) best = pair;
    }
  }
  if (!best) return Verdict::pass();
  return Verdict::fail(*best);
}

Verdict separating_dist2(const Graph& g, const std::vector<std::vector<Vertex>>& rows) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::uint64_t first = kNone;
#pragma omp parallel
  {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> touched;
#pragma omp for schedule(dynamic, 64) reduction(min : first)
    for (std::int64_t u = 0; u < n; ++u) {
      if (static_cast<std::uint64_t>(u) * g.order() > first) continue;
      for_each_dist2_pair(g, static_cast<Vertex>(u), seen, touched, [&](Vertex a, Vertex b) {
        if (rows[a] == rows[b]) {
          first = std::min<std::uint64_t>(first, std::uint64_t{a} * g.order() + b);
        }
      });
    }
  }
  if (first == kNone) return Verdict::pass();
  return Verdict::fail(UnseparatedPair{static_cast<Vertex>(first / g.order()),
                                       static_cast<Vertex>(first % g.order())});
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

}  // namespace

std::string describe(const Verdict& verdict) {
  if (verdict.ok) return "ok";
  if (!verdict.witness) return "failed";
  if (const auto* u = std::get_if<UndominatedVertex>(&*verdict.witness)) {
    return "undominated vertex " + std::to_string(u->v);
  }
  const auto& p = std::get<UnseparatedPair>(*verdict.witness);
  return "unseparated pair " + std::to_string(p.u) + " " + std::to_string(p.v);
}

VertexSet signature(const Graph& g, const VertexSet& code, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  check_code(g, code);
  return VertexSet(g.order(), trace(g, code_mask(g, code), v));
}

SignatureTable::SignatureTable(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  rows_ = all_traces(g, code_mask(g, code));
}

Verdict is_dominating(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  return dominating_from_mask(g, code_mask(g, code));
}

Verdict is_separating(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  return least_equal_pair(all_traces(g, code_mask(g, code)), all_vertices(g.order()));
}

Verdict is_identifying_code(const Graph& g, const VertexSet& code, CheckMode mode) {
  check_code(g, code);
  const auto in_code = code_mask(g, code);
  if (Verdict d = dominating_from_mask(g, in_code); !d) return d;
  auto rows = all_traces(g, in_code);
  if (mode == CheckMode::kDist2) return separating_dist2(g, rows);
  return least_equal_pair(rows, all_vertices(g.order()));
}

Verdict is_locating_dominating(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  const auto in_code = code_mask(g, code);
  if (Verdict d = dominating_from_mask(g, in_code); !d) return d;
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_code[v]) outside.push_back(v);
  }
  return least_equal_pair(all_traces(g, in_code), std::move(outside));
}

namespace reference {

namespace {

std::vector<std::vector<Vertex>> serial_traces(const Graph& g, const VertexSet& code) {
  std::vector<std::vector<Vertex>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> row;
    for (Vertex w : g.closed_neighborhood(v)) {
      if (code.contains(w)) row.push_back(w);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Verdict scan_pairs(const Graph& g, const std::vector<std::vector<Vertex>>& rows,
                   const auto& include) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (include(u, v) && rows[u] == rows[v]) return Verdict::fail(UnseparatedPair{u, v});
    }
  }
  return Verdict::pass();
}

bool within_two(const Graph& g, Vertex u, Vertex v) {
  if (g.has_edge(u, v)) return true;
  for (Vertex w : g.neighbors(u)) {
    if (g.has_edge(w, v)) return true;
  }
  return false;
}

}  // namespace

Verdict is_dominating(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  auto rows = serial_traces(g, code);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (rows[v].empty()) return Verdict::fail(UndominatedVertex{v});
  }
  return Verdict::pass();
}

Verdict is_separating(const Graph& g, const VertexSet& code) {
  check_code(g, code);
  return scan_pairs(g, serial_traces(g, code), [](Vertex, Vertex) { return true; });
}

Verdict is_identifying_code(const Graph& g, const VertexSet& code, CheckMode mode) {
  if (Verdict d = reference::is_dominating(g, code); !d) return d;
  auto rows = serial_traces(g, code);
  if (mode == CheckMode::kDist2) {
    return scan_pairs(g, rows, [&](Vertex u, Vertex v) { return within_two(g, u, v); });
  }
  return scan_pairs(g, rows, [](Vertex, Vertex) { return true; });
}

Verdict is_locating_dominating(const Graph& g, const VertexSet& code) {
  if (Verdict d = reference::is_dominating(g, code); !d) return d;
  return scan_pairs(g, serial_traces(g, code), [&](Vertex u, Vertex v) {
    return !code.contains(u) && !code.contains(v);
  });
}

}  // namespace reference

}  // namespace idcodes
