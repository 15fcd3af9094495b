#include "idcodes/solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

#include "idcodes/codes.hpp"

namespace idcodes {

NotTwinFreeError::NotTwinFreeError(Vertex u, Vertex v)
    : std::runtime_error("graph is not twin-free: " + std::to_string(u) + " and " +
                         std::to_string(v) + " are twins"),
      twins(u, v) {}

namespace {

using Mask = std::uint64_t;

void require_twin_free(const Graph& g) {
  auto twins = find_twins(g);
  if (!twins.empty()) throw NotTwinFreeError(twins.front().u, twins.front().v);
}

void require_exact_size(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("exact solver needs n >= 1");
  if (g.order() > kMaxExactOrder) {
    throw std::invalid_argument("exact solver supports at most " +
                                std::to_string(kMaxExactOrder) + " vertices");
  }
}

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> masks(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    masks[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) masks[v] |= Mask{1} << w;
  }
  return masks;
}

// Vertices by descending degree, ties to the lower index.
std::vector<Vertex> branch_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

VertexSet set_from_mask(std::size_t n, Mask m) {
  std::vector<Vertex> members;
  while (m) {
    members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return VertexSet(n, std::move(members));
}

int pop(Mask m) { return std::popcount(m); }

// Smallest k such that the k largest gains sum to at least `need`; returns
// -1 if even all of them fall short.
int cover_bound(std::vector<long>& gains, long need) {
  if (need <= 0) return 0;
  std::sort(gains.begin(), gains.end(), std::greater<>());
  long sum = 0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    sum += gains[i];
    if (sum >= need) return static_cast<int>(i + 1);
  }
  return -1;
}

int ceil_log2(long x) {
  int k = 0;
  while ((1L << k) < x) ++k;
  return k;
}

class IdCodeSearch {
 public:
  IdCodeSearch(const Graph& g, std::uint64_t budget)
      : n_(g.order()), closed_(closed_masks(g)), order_(branch_order(g)), budget_(budget) {
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  SolveResult run(const VertexSet& incumbent) {
    for (Vertex v : incumbent) best_ |= Mask{1} << v;
    best_size_ = pop(best_);
    search(0, 0, all_, {});
    return {set_from_mask(n_, best_), exhausted_ ? SolveStatus::kBudgetExceeded : SolveStatus::kOptimal,
            nodes_};
  }

 private:
  // `undominated` shares the empty trace with a phantom vertex; `classes`
  // holds the dominated vertices that are not yet separated (size >= 2).
  void search(Mask chosen, Mask excluded, Mask undominated, std::vector<Mask> classes) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (undominated == 0 && classes.empty()) {
      if (pop(chosen) < best_size_) {
        best_ = chosen;
        best_size_ = pop(chosen);
      }
      return;
    }
    const Mask open = all_ & ~(chosen | excluded);
    const int used = pop(chosen);

    // Pairs still unresolved, counting the phantom.
    const long und = pop(undominated);
    long pairs = und * (und + 1) / 2;
    long merged = und;  // n+1 items minus number of classes
    long largest = und + 1;
    for (Mask k : classes) {
      long s = pop(k);
      pairs += s * (s - 1) / 2;
      merged += s - 1;
      largest = std::max(largest, s);
    }
    const long classes_now = static_cast<long>(n_) + 1 - merged;
    // Each added vertex at most doubles the class count: classes * 2^k >= n + 1.
    int bound = ceil_log2(largest);
    while ((classes_now << bound) < static_cast<long>(n_) + 1) ++bound;

    std::vector<long> gains;
    for (Mask rest = open; rest; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      const Mask nv = closed_[v];
      long gain = static_cast<long>(pop(undominated & nv)) * (pop(undominated & ~nv) + 1);
      for (Mask k : classes) gain += static_cast<long>(pop(k & nv)) * pop(k & ~nv);
      if (gain > 0) gains.push_back(gain);
    }
    const int cover = cover_bound(gains, pairs);
    if (cover < 0) return;
    bound = std::max(bound, cover);
    if (used + bound >= best_size_) return;

    // Branch on the unresolved pair with the fewest available separators.
    Mask branch = 0;
    int fewest = 65;
    auto consider = [&](Mask separators) {
      const int c = pop(separators);
      if (c < fewest) {
        fewest = c;
        branch = separators;
      }
    };
    for (Mask rest = undominated; rest && fewest > 0; rest &= rest - 1) {
      consider(closed_[std::countr_zero(rest)] & open);
    }
    for (Mask k : classes) {
      for (Mask a = k; a && fewest > 0; a &= a - 1) {
        const int ia = std::countr_zero(a);
        for (Mask b = a & (a - 1); b && fewest > 0; b &= b - 1) {
          consider((closed_[ia] ^ closed_[std::countr_zero(b)]) & open);
        }
      }
    }
    if (fewest == 0) return;

    Mask banned = excluded;
    for (Vertex v : order_) {
      if (!(branch >> v & 1)) continue;
      const Mask nv = closed_[v];
      std::vector<Mask> next;
      next.reserve(classes.size() + 1);
      if (pop(undominated & nv) >= 2) next.push_back(undominated & nv);
      for (Mask k : classes) {
        if (pop(k & nv) >= 2) next.push_back(k & nv);
        if (pop(k & ~nv) >= 2) next.push_back(k & ~nv);
      }
      search(chosen | (Mask{1} << v), banned, undominated & ~nv, std::move(next));
      if (exhausted_) return;
      banned |= Mask{1} << v;
    }
  }

  std::size_t n_;
  std::vector<Mask> closed_;
  std::vector<Vertex> order_;
  std::uint64_t budget_;
  Mask all_ = 0;
  Mask best_ = 0;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class DominatingSearch {
 public:
  DominatingSearch(const Graph& g, std::uint64_t budget)
      : n_(g.order()), closed_(closed_masks(g)), order_(branch_order(g)), budget_(budget) {
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  SolveResult run(const VertexSet& incumbent) {
    for (Vertex v : incumbent) best_ |= Mask{1} << v;
    best_size_ = pop(best_);
    search(0, 0, all_);
    return {set_from_mask(n_, best_), exhausted_ ? SolveStatus::kBudgetExceeded : SolveStatus::kOptimal,
            nodes_};
  }

 private:
  void search(Mask chosen, Mask excluded, Mask undominated) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (undominated == 0) {
      if (pop(chosen) < best_size_) {
        best_ = chosen;
        best_size_ = pop(chosen);
      }
      return;
    }
    const Mask open = all_ & ~(chosen | excluded);
    std::vector<long> gains;
    for (Mask rest = open; rest; rest &= rest - 1) {
      const int c = pop(closed_[std::countr_zero(rest)] & undominated);
      if (c > 0) gains.push_back(c);
    }
    const int bound = cover_bound(gains, pop(undominated));
    if (bound < 0 || pop(chosen) + bound >= best_size_) return;

    Mask branch = 0;
    int fewest = 65;
    for (Mask rest = undominated; rest; rest &= rest - 1) {
      const Mask candidates = closed_[std::countr_zero(rest)] & open;
      if (pop(candidates) < fewest) {
        fewest = pop(candidates);
        branch = candidates;
      }
    }
    if (fewest == 0) return;
    Mask banned = excluded;
    for (Vertex v : order_) {
      if (!(branch >> v & 1)) continue;
      search(chosen | (Mask{1} << v), banned, undominated & ~closed_[v]);
      if (exhausted_) return;
      banned |= Mask{1} << v;
    }
  }

  std::size_t n_;
  std::vector<Mask> closed_;
  std::vector<Vertex> order_;
  std::uint64_t budget_;
  Mask all_ = 0;
  Mask best_ = 0;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SolveResult exact_min_idcode(const Graph& g, std::uint64_t budget) {
  require_exact_size(g);
  require_twin_free(g);
  IdCodeSearch search(g, budget);
  return search.run(greedy_idcode(g));
}

SolveResult exact_min_dominating(const Graph& g, std::uint64_t budget) {
  require_exact_size(g);
  DominatingSearch search(g, budget);
  return search.run(greedy_dominating(g));
}

VertexSet greedy_dominating(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> dominated(n, 0);
  std::vector<long> coverage(n);
  // Max-heap on (coverage, -index); entries go stale as coverage drops.
  std::priority_queue<std::pair<long, long>> heap;
  for (Vertex v = 0; v < n; ++v) {
    coverage[v] = static_cast<long>(g.degree(v)) + 1;
    heap.emplace(coverage[v], -static_cast<long>(v));
  }
  std::vector<Vertex> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    auto [cov, neg] = heap.top();
    heap.pop();
    const auto v = static_cast<Vertex>(-neg);
    if (cov != coverage[v]) {
      heap.emplace(coverage[v], neg);
      continue;
    }
    chosen.push_back(v);
    for (Vertex u : g.closed_neighborhood(v)) {
      if (dominated[u]) continue;
      dominated[u] = 1;
      --remaining;
      for (Vertex w : g.closed_neighborhood(u)) --coverage[w];
    }
  }
  return VertexSet(n, std::move(chosen));
}

VertexSet greedy_idcode(const Graph& g) {
  require_twin_free(g);
  const std::size_t n = g.order();
  // Class 0 holds the undominated vertices; other classes group dominated
  // vertices with equal traces.
  std::vector<std::size_t> cls(n, 0);
  std::vector<long> class_size{static_cast<long>(n)};
  std::vector<char> in_code(n, 0);
  std::vector<long> hits;
  std::vector<std::size_t> touched;
  std::vector<Vertex> chosen;

  auto unresolved = [&]() {
    if (class_size[0] > 0) return true;
    for (std::size_t c = 1; c < class_size.size(); ++c) {
      if (class_size[c] > 1) return true;
    }
    return false;
  };

  while (unresolved()) {
    hits.assign(class_size.size(), 0);
    long best_gain = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in_code[v]) continue;
      touched.clear();
      for (Vertex u : g.closed_neighborhood(v)) {
        if (hits[cls[u]]++ == 0) touched.push_back(cls[u]);
      }
      long gain = 0;
      for (std::size_t c : touched) {
        gain += hits[c] * (class_size[c] - hits[c]);
        if (c == 0) gain += hits[c];
        hits[c] = 0;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best_gain == 0) throw std::logic_error("greedy_idcode stalled on a twin-free graph");

    in_code[best] = 1;
    chosen.push_back(best);
    std::vector<std::pair<std::size_t, std::size_t>> moved;  // old class -> new class
    for (Vertex u : g.closed_neighborhood(best)) {
      const std::size_t old = cls[u];
      auto it = std::find_if(moved.begin(), moved.end(), [&](auto& p) { return p.first == old; });
      std::size_t target;
      if (it != moved.end()) {
        target = it->second;
      } else {
        target = class_size.size();
        class_size.push_back(0);
        moved.emplace_back(old, target);
      }
      cls[u] = target;
      --class_size[old];
      ++class_size[target];
    }
  }

  VertexSet code(n, std::move(chosen));
  if (!is_identifying_code(g, code)) {
    throw std::logic_error("greedy_idcode produced an invalid code");
  }
  return code;
}

}  // namespace idcodes
