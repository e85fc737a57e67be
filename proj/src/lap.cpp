#include "sreflp/lap.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sreflp {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Shortest-augmenting-path Hungarian with potentials.  Fills col_row
// (column -> matched row) plus final dual values u, v satisfying
// u[i] + v[j] <= a[i][j] with equality on matched edges.
void hungarian(int n, std::span<const std::int64_t> a, std::vector<int>& col_row,
               std::vector<std::int64_t>& u, std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> uu(n + 1, 0), vv(n + 1, 0), minv(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      std::int64_t delta = kInf;
      const std::int64_t* row = a.data() + static_cast<std::size_t>(i0 - 1) * n;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = row[j - 1] - uu[i0] - vv[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          uu[p[j]] += delta;
          vv[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  col_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) col_row[j - 1] = p[j] - 1;
  u.assign(n, 0);
  v.assign(n, 0);
  for (int i = 0; i < n; ++i) u[i] = uu[i + 1];
  for (int j = 0; j < n; ++j) v[j] = vv[j + 1];
}

// Kosaraju SCC over an adjacency list; returns component ids.
std::vector<int> scc_components(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<std::vector<int>> radj(n);
  for (int a = 0; a < n; ++a)
    for (int b : adj[a]) radj[b].push_back(a);

  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [vtx, idx] = stack.back();
      if (idx < adj[vtx].size()) {
        const int nxt = adj[vtx][idx++];
        if (!seen[nxt]) {
          seen[nxt] = 1;
          stack.push_back({nxt, 0});
        }
      } else {
        order.push_back(vtx);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  int comps = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> dfs{*it};
    comp[*it] = comps;
    while (!dfs.empty()) {
      const int vtx = dfs.back();
      dfs.pop_back();
      for (int nxt : radj[vtx])
        if (comp[nxt] == -1) {
          comp[nxt] = comps;
          dfs.push_back(nxt);
        }
    }
    ++comps;
  }
  return comp;
}

struct LexRefiner {
  int n;
  const std::vector<std::vector<int>>& tight;  // ascending columns per row
  std::vector<int> row_col, col_row;
  std::vector<char> fixed_col;
  std::vector<char> visited;

  bool augment(int r) {
    for (int j : tight[r]) {
      if (fixed_col[j] || visited[j]) continue;
      visited[j] = 1;
      if (col_row[j] == -1 || augment(col_row[j])) {
        col_row[j] = r;
        row_col[r] = j;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

AssignmentResult lap_solve(int n, std::span<const std::int64_t> costs) {
  if (n < 1) throw std::invalid_argument("assignment matrix must have n >= 1");
  if (costs.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("assignment matrix must be square");

  // Shift to nonnegative entries so the potential bookkeeping never mixes
  // signs; optima and tight edges are unaffected.
  const std::int64_t lo = *std::min_element(costs.begin(), costs.end());
  std::vector<std::int64_t> a(costs.begin(), costs.end());
  if (lo < 0)
    for (auto& x : a) x -= lo;

  std::vector<int> col_row;
  std::vector<std::int64_t> u, v;
  hungarian(n, a, col_row, u, v);

  // Complementary slackness: the optimal assignments are exactly the perfect
  // matchings of the zero-reduced-cost subgraph.  Commit rows in order to
  // their smallest column that still leaves the rest matchable; a non-matched
  // edge stays matchable iff its endpoints share an SCC of the alternating
  // orientation (row -> row currently holding the target column).
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(i) * n + j] == u[i] + v[j])
        tight[i].push_back(j);

  LexRefiner ref{n, tight, std::vector<int>(n, -1), col_row,
                 std::vector<char>(n, 0), std::vector<char>(n, 0)};
  for (int j = 0; j < n; ++j)
    if (col_row[j] >= 0) ref.row_col[col_row[j]] = j;

  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (auto& list : adj) list.clear();
    for (int r = i; r < n; ++r)
      for (int j : tight[r])
        if (!ref.fixed_col[j] && j != ref.row_col[r])
          adj[r].push_back(ref.col_row[j]);
    const std::vector<int> comp = scc_components(n, adj);

    int chosen = -1;
    for (int j : tight[i]) {
      if (ref.fixed_col[j]) continue;
      if (j == ref.row_col[i] ||
          comp[i] == comp[ref.col_row[j]]) {
        chosen = j;
        break;
      }
    }
    if (chosen == -1)
      throw std::logic_error("assignment refinement lost a perfect matching");

    if (chosen != ref.row_col[i]) {
      const int displaced = ref.col_row[chosen];
      const int freed = ref.row_col[i];
      ref.row_col[i] = chosen;
      ref.col_row[chosen] = i;
      ref.col_row[freed] = -1;
      ref.row_col[displaced] = -1;
      ref.fixed_col[chosen] = 1;
      std::fill(ref.visited.begin(), ref.visited.end(), 0);
      if (!ref.augment(displaced))
        throw std::logic_error("assignment refinement lost a perfect matching");
    } else {
      ref.fixed_col[chosen] = 1;
    }
  }

  AssignmentResult result{std::move(ref.row_col), 0};
  for (int i = 0; i < n; ++i)
    result.value += costs[static_cast<std::size_t>(i) * n + result.assignment[i]];
  return result;
}

}  // namespace sreflp
