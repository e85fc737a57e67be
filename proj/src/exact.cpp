#include "sreflp/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sreflp {

namespace {

constexpr Cost kNoIncumbent = std::numeric_limits<Cost>::max();

Cost perm_cost(const WeightMatrix& w, const std::vector<int>& perm) {
  Cost total = 0;
  const int n = static_cast<int>(perm.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) total += w.at(perm[p], perm[q]) * (q - p);
  return total;
}

struct BbState {
  const WeightMatrix& w;
  int n;
  bool prune;
  std::vector<int> perm;
  std::vector<char> placed;
  // For each unplaced facility u: sum_a = Σ w[u][v] over placed v,
  // sum_aq = Σ w[u][v]·q over placed v at position q.
  std::vector<Cost> sum_a, sum_aq;
  std::vector<std::vector<int>> dist;  // dist[m] = distance_multiset(m)
  std::vector<Cost> pair_buf;
  Cost best = kNoIncumbent;
  std::vector<int> best_perm;
  std::uint64_t leaves = 0;

  explicit BbState(const WeightMatrix& wm, bool prune_on)
      : w(wm),
        n(wm.size()),
        prune(prune_on),
        perm(wm.size(), -1),
        placed(wm.size(), 0),
        sum_a(wm.size(), 0),
        sum_aq(wm.size(), 0),
        dist(wm.size() + 1) {
    for (int m = 2; m <= n; ++m) dist[m] = distance_multiset(m);
    pair_buf.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  }

  // Admissible completion bound for the node at depth d with partial cost g:
  // every unplaced facility sits at position >= d, and the unplaced block's
  // internal distances majorize distance_multiset(n - d).
  Cost completion_bound(int d, Cost g) {
    Cost cross = 0;
    for (int u = 0; u < n; ++u)
      if (!placed[u]) cross += static_cast<Cost>(d) * sum_a[u] - sum_aq[u];
    Cost tail = 0;
    const int m = n - d;
    if (m >= 2) {
      auto& weights = pair_buf;
      weights.clear();
      for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        for (int v = u + 1; v < n; ++v)
          if (!placed[v]) weights.push_back(w.at(u, v));
      }
      std::sort(weights.begin(), weights.end(), std::greater<>());
      const std::vector<int>& dm = dist[m];
      for (std::size_t i = 0; i < weights.size(); ++i)
        tail += weights[i] * dm[i];
    }
    return g + cross + tail;
  }

  void dfs(int d, Cost g) {
    if (d == n) {
      ++leaves;
      if (g < best) {
        best = g;
        best_perm = perm;
      }
      return;
    }
    if (prune && best != kNoIncumbent && completion_bound(d, g) >= best) return;
    for (int f = 0; f < n; ++f) {
      if (placed[f]) continue;
      if (d == n - 1 && perm[0] > f) continue;  // mirror half
      perm[d] = f;
      placed[f] = 1;
      const Cost g2 = g + static_cast<Cost>(d) * sum_a[f] - sum_aq[f];
      for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        sum_a[u] += w.at(u, f);
        sum_aq[u] += w.at(u, f) * d;
      }
      dfs(d + 1, g2);
      for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        sum_a[u] -= w.at(u, f);
        sum_aq[u] -= w.at(u, f) * d;
      }
      placed[f] = 0;
      perm[d] = -1;
    }
  }
};

}  // namespace

std::string to_string(SolveMethod method) {
  return method == SolveMethod::Exhaustive ? "exhaustive" : "branch-and-bound";
}

ExactResult exhaustive_solve(const WeightMatrix& w, int max_n) {
  const int n = w.size();
  if (n > max_n)
    throw std::invalid_argument(
        "exhaustive enumeration refused: n=" + std::to_string(n) +
        " exceeds the configured limit " + std::to_string(max_n));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactResult result;
  result.method = SolveMethod::Exhaustive;
  Cost best = kNoIncumbent;
  do {
    if (perm.front() > perm.back()) continue;  // mirror half
    ++result.nodes_explored;
    const Cost c = perm_cost(w, perm);
    if (c < best) {
      best = c;
      result.optimal_layout.perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.optimal_cost = best;
  return result;
}

ExactResult bb_solve(const WeightMatrix& w, Pruning pruning) {
  BbState state(w, pruning == Pruning::Enhanced);
  state.dfs(0, 0);
  ExactResult result;
  result.method = SolveMethod::BranchAndBound;
  result.optimal_cost = state.best;
  result.optimal_layout.perm = std::move(state.best_perm);
  result.nodes_explored = state.leaves;
  return result;
}

}  // namespace sreflp
