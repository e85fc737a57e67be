#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sreflp/bounds.hpp"
#include "sreflp/exact.hpp"
#include "sreflp/instance.hpp"
#include "sreflp/scheme.hpp"

using namespace sreflp;

namespace {

WeightMatrix comparative() {
  return symmetrize(FlowChart(5, ChartKind::FromTo,
                              {0, 2, 2, 3, 0,  //
                               1, 0, 5, 2, 3,  //
                               6, 1, 0, 4, 2,  //
                               1, 2, 6, 0, 3,  //
                               1, 5, 3, 3, 0}));
}

WeightMatrix experimental() {
  return symmetrize(FlowChart(5, ChartKind::FromTo,
                              {0, 2, 2, 1, 1,  //
                               0, 0, 1, 1, 1,  //
                               0, 1, 0, 4, 2,  //
                               0, 1, 0, 0, 2,  //
                               0, 0, 0, 0, 0}));
}

WeightMatrix instance_o() {
  return symmetrize(FlowChart(5, ChartKind::FromBetween,
                              {0, 1, 5, 5, 7,  //
                               1, 0, 8, 3, 4,  //
                               5, 8, 0, 1, 5,  //
                               5, 3, 1, 0, 7,  //
                               7, 4, 5, 7, 0}));
}

std::vector<Cost> costs_of(const StrategyResult& r) {
  std::vector<Cost> costs;
  for (const StrategyOutcome& o : r.outcomes) costs.push_back(o.cost);
  return costs;
}

}  // namespace

TEST_CASE("strategy orders visit positions as documented") {
  CHECK(strategy_order(0, 5) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(strategy_order(1, 5) == std::vector<int>{0, 4, 3, 1, 2});
  CHECK(strategy_order(2, 5) == std::vector<int>{0, 4, 1, 3, 2});
  CHECK(strategy_order(3, 5) == std::vector<int>{0, 4, 1, 2, 3});
  CHECK(strategy_order(4, 5) == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(strategy_order(1, 6) == std::vector<int>{0, 5, 4, 1, 3, 2});
  for (int id = 0; id < 5; ++id) CHECK(strategy_order(id, 2) == std::vector<int>{0, 1});
  for (int id = 1; id < 5; ++id) CHECK(strategy_order(id, 3) == std::vector<int>{0, 2, 1});
}

TEST_CASE("strategy orders are permutations starting at the first position") {
  for (int id = 0; id < 5; ++id)
    for (int n = 2; n <= 50; ++n) {
      std::vector<int> order = strategy_order(id, n);
      REQUIRE(static_cast<int>(order.size()) == n);
      CHECK(order[0] == 0);
      std::sort(order.begin(), order.end());
      for (int p = 0; p < n; ++p) CHECK(order[p] == p);
    }
}

TEST_CASE("strategy order rejects bad arguments") {
  CHECK_THROWS_WITH_AS(strategy_order(5, 4), "strategy id must be in 0..4",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(strategy_order(-1, 4), "strategy id must be in 0..4",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(strategy_order(0, 1), "facility count must be at least 2",
                       std::invalid_argument);
}

TEST_CASE("shipping facility is the first-row argmin") {
  CHECK(shipping_facility(gl_matrix(instance_o())) == 1);
  CHECK(shipping_facility(gl_matrix(WeightMatrix(2, {0, 5, 5, 0}))) == 0);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const WeightMatrix w = oracle::random_weights(rng, n, 6, 100);
    const GlMatrix g = gl_matrix(w);
    const int picked = shipping_facility(g);
    for (int f = 0; f < n; ++f) {
      CHECK(g.at(0, picked) <= g.at(0, f));
      if (g.at(0, f) == g.at(0, picked)) CHECK(picked <= f);
    }
  }
}

TEST_CASE("rank fill reproduces the worked layouts") {
  const WeightMatrix w = instance_o();
  CHECK(build_layout(w, 1, FillRule::Rank).perm == std::vector<int>{1, 2, 4, 0, 3});
  CHECK(build_layout(w, 0, FillRule::Rank).perm == std::vector<int>{1, 3, 0, 2, 4});
}

TEST_CASE("greedy fill matches rank fill on the worked instances") {
  for (const WeightMatrix& w : {comparative(), experimental(), instance_o()})
    for (int id = 0; id < 5; ++id)
      CHECK(build_layout(w, id, FillRule::Greedy) == build_layout(w, id, FillRule::Rank));
}

TEST_CASE("every strategy pins the shipping facility to the first position") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const WeightMatrix w = oracle::random_weights(rng, n, 8, 120);
    const int ship = shipping_facility(gl_matrix(w));
    for (int id = 0; id < 5; ++id)
      for (FillRule rule : {FillRule::Rank, FillRule::Greedy}) {
        const Layout layout = build_layout(w, id, rule);
        CHECK(is_permutation(layout, n));
        CHECK(layout.perm[0] == ship);
      }
  }
}

TEST_CASE("strategy costs reproduce the worked runs") {
  const StrategyResult o = run_strategies(instance_o(), FillRule::Rank);
  CHECK(costs_of(o) == std::vector<Cost>{97, 75, 97, 89, 87});
  CHECK(o.best().strategy_id == 1);
  CHECK(o.best().cost == 75);
  CHECK(o.shipping_facility == 1);

  const StrategyResult c = run_strategies(comparative(), FillRule::Rank);
  CHECK(costs_of(c) == std::vector<Cost>{112, 93, 99, 106, 90});
  CHECK(c.best().strategy_id == 4);
  CHECK(c.best().cost == 90);

  const StrategyResult e = run_strategies(experimental(), FillRule::Rank);
  CHECK(costs_of(e) == std::vector<Cost>{37, 36, 32, 33, 35});
  CHECK(e.best().strategy_id == 2);
  CHECK(e.best().cost == 32);
}

TEST_CASE("two-facility instances cost exactly the single weight") {
  const WeightMatrix w(2, {0, 7, 7, 0});
  const StrategyResult r = approx_scheme(w);
  for (const StrategyOutcome& o : r.outcomes) CHECK(o.cost == 7);
}

TEST_CASE("the scheme is deterministic and never beats the bounds") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const WeightMatrix w = oracle::random_weights(rng, n, 9, trial % 3 ? 0 : 250);
    for (FillRule rule : {FillRule::Rank, FillRule::Greedy}) {
      const StrategyResult first = approx_scheme(w, rule);
      const StrategyResult second = approx_scheme(w, rule);
      REQUIRE(first.outcomes.size() == 5);
      CHECK(first.outcomes == second.outcomes);
      CHECK(first.best_index == second.best_index);
      CHECK(first.best().cost >= enhanced_lb(w));
      CHECK(first.best().cost >= glb(w).bound);
      for (const StrategyOutcome& o : first.outcomes)
        CHECK(o.cost == layout_cost(w, o.layout));
    }
  }
}

TEST_CASE("strategy subsets run the requested ids in ascending order") {
  const StrategyResult r = run_strategies(comparative(), FillRule::Rank, {4, 2, 4});
  REQUIRE(r.outcomes.size() == 2);
  CHECK(r.outcomes[0].strategy_id == 2);
  CHECK(r.outcomes[1].strategy_id == 4);
  CHECK(r.outcomes[0].cost == 99);
  CHECK(r.outcomes[1].cost == 90);
  CHECK(r.best().strategy_id == 4);

  CHECK_THROWS_WITH_AS(run_strategies(comparative(), FillRule::Rank, {}),
                       "at least one strategy id required", std::invalid_argument);
  CHECK_THROWS_WITH_AS(run_strategies(comparative(), FillRule::Rank, {0, 5}),
                       "strategy id must be in 0..4", std::invalid_argument);
}

TEST_CASE("ties on cost resolve to the lowest strategy id") {
  const WeightMatrix w(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  const StrategyResult r = approx_scheme(w);
  // Strategies 1..4 coincide on three facilities; the lowest id must win
  // whenever it matches the minimum cost.
  Cost best = r.outcomes[0].cost;
  for (const StrategyOutcome& o : r.outcomes) best = std::min(best, o.cost);
  for (const StrategyOutcome& o : r.outcomes) {
    if (o.cost == best) {
      CHECK(r.best().strategy_id == o.strategy_id);
      break;
    }
  }
  for (int id = 2; id <= 4; ++id)
    CHECK(r.outcomes[id].layout == r.outcomes[1].layout);
}

TEST_CASE("optimum-scenario verdicts match the worked instances") {
  const ScenarioVerdict o = opt_scenario_check(instance_o(), Cost{75});
  CHECK(o.holds);
  CHECK(o.strategy1_cost == 75);
  CHECK(o.strategy2_cost == 97);
  REQUIRE(o.confirmed.has_value());
  CHECK(*o.confirmed);

  const ScenarioVerdict c = opt_scenario_check(comparative(), Cost{90});
  CHECK_FALSE(c.holds);
  CHECK(c.strategy1_cost == 93);
  CHECK(c.strategy2_cost == 99);
  CHECK_FALSE(c.confirmed.has_value());

  const ScenarioVerdict e = opt_scenario_check(experimental(), Cost{32});
  CHECK(e.holds);
  CHECK(e.strategy1_cost == 36);
  CHECK(e.strategy2_cost == 32);
  REQUIRE(e.confirmed.has_value());
  CHECK(*e.confirmed);

  const ScenarioVerdict unknown = opt_scenario_check(experimental());
  CHECK(unknown.holds);
  CHECK_FALSE(unknown.optimal_cost.has_value());
  CHECK_FALSE(unknown.confirmed.has_value());
}
