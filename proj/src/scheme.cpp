#include "sreflp/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sreflp {

namespace {

// Facilities ascending by (first-position entry, index).
std::vector<int> ranking_from_row(const std::vector<std::int64_t>& row) {
  std::vector<int> ranking(row.size());
  std::iota(ranking.begin(), ranking.end(), 0);
  std::sort(ranking.begin(), ranking.end(), [&](int a, int b) {
    return row[a] != row[b] ? row[a] < row[b] : a < b;
  });
  return ranking;
}

Layout fill_rank(const std::vector<int>& order, const std::vector<int>& ranking) {
  Layout layout;
  layout.perm.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    layout.perm[order[i]] = ranking[i];
  return layout;
}

Layout fill_greedy(const GlMatrix& g, const std::vector<int>& order) {
  Layout layout;
  layout.perm.assign(g.n, -1);
  std::vector<char> used(g.n, 0);
  for (int p : order) {
    int best = -1;
    for (int f = 0; f < g.n; ++f) {
      if (used[f]) continue;
      if (best == -1 || g.at(p, f) < g.at(p, best)) best = f;
    }
    used[best] = 1;
    layout.perm[p] = best;
  }
  return layout;
}

std::vector<int> checked_ids(std::vector<int> ids) {
  if (ids.empty())
    throw std::invalid_argument("at least one strategy id required");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids)
    if (id < 0 || id > 4)
      throw std::invalid_argument("strategy id must be in 0..4");
  return ids;
}

}  // namespace

std::string to_string(FillRule rule) {
  return rule == FillRule::Rank ? "rank" : "greedy";
}

std::vector<int> strategy_order(int id, int n) {
  if (id < 0 || id > 4)
    throw std::invalid_argument("strategy id must be in 0..4");
  if (n < 2) throw std::invalid_argument("facility count must be at least 2");
  std::vector<int> order;
  order.reserve(n);
  int lo = 0, hi = n - 1;
  switch (id) {
    case 0:
      for (int p = 0; p < n; ++p) order.push_back(p);
      break;
    case 1:  // ends inward, two from the right between left picks
      for (int k = 0; static_cast<int>(order.size()) < n; ++k) {
        const bool left = k == 0 || (k >= 3 && k % 2 == 1);
        order.push_back(left ? lo++ : hi--);
      }
      break;
    case 2:  // strict left/right alternation
      for (int k = 0; static_cast<int>(order.size()) < n; ++k)
        order.push_back(k % 2 == 0 ? lo++ : hi--);
      break;
    case 3:  // both ends, then left to right
      order.push_back(lo++);
      order.push_back(hi--);
      while (lo <= hi) order.push_back(lo++);
      break;
    case 4:  // left end, then right to left
      order.push_back(lo++);
      while (hi >= lo) order.push_back(hi--);
      break;
  }
  return order;
}

int shipping_facility(const GlMatrix& g) {
  int best = 0;
  for (int f = 1; f < g.n; ++f)
    if (g.at(0, f) < g.at(0, best)) best = f;
  return best;
}

Layout build_layout(const WeightMatrix& w, int strategy_id, FillRule rule) {
  const std::vector<int> order = strategy_order(strategy_id, w.size());
  if (rule == FillRule::Rank)
    return fill_rank(order, ranking_from_row(gl_row(w, 0)));
  return fill_greedy(gl_matrix(w), order);
}

StrategyResult run_strategies(const WeightMatrix& w, FillRule rule,
                              const std::vector<int>& ids) {
  const std::vector<int> wanted = checked_ids(ids);
  StrategyResult result;
  result.fill = rule;

  std::vector<int> ranking;
  GlMatrix g;
  if (rule == FillRule::Rank) {
    ranking = ranking_from_row(gl_row(w, 0));
    result.shipping_facility = ranking[0];
  } else {
    g = gl_matrix(w);
    result.shipping_facility = shipping_facility(g);
  }

  for (int id : wanted) {
    const std::vector<int> order = strategy_order(id, w.size());
    StrategyOutcome outcome;
    outcome.strategy_id = id;
    outcome.layout = rule == FillRule::Rank ? fill_rank(order, ranking)
                                            : fill_greedy(g, order);
    outcome.cost = layout_cost(w, outcome.layout);
    result.outcomes.push_back(std::move(outcome));
  }

  result.best_index = 0;
  for (std::size_t i = 1; i < result.outcomes.size(); ++i)
    if (result.outcomes[i].cost < result.outcomes[result.best_index].cost)
      result.best_index = static_cast<int>(i);
  return result;
}

StrategyResult approx_scheme(const WeightMatrix& w, FillRule rule) {
  return run_strategies(w, rule, {0, 1, 2, 3, 4});
}

ScenarioVerdict opt_scenario_check(const WeightMatrix& w,
                                   std::optional<Cost> optimal_cost) {
  ScenarioVerdict verdict;
  verdict.holds = glb(w).bound == enhanced_lb(w);
  verdict.strategy1_cost = layout_cost(w, build_layout(w, 1, FillRule::Rank));
  verdict.strategy2_cost = layout_cost(w, build_layout(w, 2, FillRule::Rank));
  verdict.optimal_cost = optimal_cost;
  if (verdict.holds && optimal_cost)
    verdict.confirmed =
        std::min(verdict.strategy1_cost, verdict.strategy2_cost) == *optimal_cost;
  return verdict;
}

}  // namespace sreflp
