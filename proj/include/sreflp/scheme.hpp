#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sreflp/bounds.hpp"
#include "sreflp/instance.hpp"
#include "sreflp/objective.hpp"

namespace sreflp {

enum class FillRule {
  Rank,    // rank facilities by first-position entry, map onto the order
  Greedy,  // per position, cheapest unused facility in the full matrix
};

std::string to_string(FillRule rule);

/// Position visit order for strategy id in 0..4, as 0-based positions.
/// Written 1-based: 0 → 1,2,…,n; 1 → 1,n,n−1,2,n−2,3,…; 2 → 1,n,2,n−1,3,…;
/// 3 → 1,n,2,3,…,n−1; 4 → 1,n,n−1,…,2.
std::vector<int> strategy_order(int id, int n);

/// Facility whose first-row entry is smallest (lowest index on ties); every
/// strategy pins it to the first visited position.
int shipping_facility(const GlMatrix& g);

/// Deterministic layout for one strategy under the given fill rule.  Rank:
/// facilities sorted ascending by first-position entry, i-th ranked facility
/// at the i-th position of strategy_order.  Greedy: for each position in
/// strategy order, the unused facility with the cheapest entry there.
Layout build_layout(const WeightMatrix& w, int strategy_id, FillRule rule);

struct StrategyOutcome {
  int strategy_id = 0;
  Layout layout;
  Cost cost = 0;

  bool operator==(const StrategyOutcome&) const = default;
};

struct StrategyResult {
  std::vector<StrategyOutcome> outcomes;  // ascending strategy id
  int best_index = 0;                     // into outcomes; lowest id on ties
  int shipping_facility = 0;
  FillRule fill = FillRule::Rank;

  const StrategyOutcome& best() const { return outcomes[best_index]; }
};

/// Runs the given strategies under one fill rule and keeps every outcome.
StrategyResult run_strategies(const WeightMatrix& w, FillRule rule,
                              const std::vector<int>& ids = {0, 1, 2, 3, 4});

/// All five strategies; with FillRule::Rank only the first matrix row is
/// computed, so the whole scheme stays within O(n^2 log n).
StrategyResult approx_scheme(const WeightMatrix& w,
                             FillRule rule = FillRule::Rank);

/// Optimum-scenario test: holds iff glb == enhanced_lb, in which case the
/// optimum is conjectured to be min(strategy 1, strategy 2).
struct ScenarioVerdict {
  bool holds = false;
  Cost strategy1_cost = 0;
  Cost strategy2_cost = 0;
  std::optional<Cost> optimal_cost;  // echoed back when supplied
  std::optional<bool> confirmed;     // min(s1, s2) == optimal_cost
};

ScenarioVerdict opt_scenario_check(const WeightMatrix& w,
                                   std::optional<Cost> optimal_cost = {});

}  // namespace sreflp
