#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sreflp/lap.hpp"

using namespace sreflp;

TEST_CASE("lap solves the instance-o relaxation matrix") {
  const std::vector<std::int64_t> costs{
      36, 29, 37, 30, 52,  //
      25, 21, 26, 21, 36,  //
      24, 20, 25, 20, 32,  //
      25, 21, 26, 21, 36,  //
      36, 29, 37, 30, 52};
  const AssignmentResult result = lap_solve(5, costs);
  CHECK(result.value == 142);
  CHECK(result.assignment == std::vector<int>{1, 0, 4, 2, 3});
}

TEST_CASE("lap handles the 1x1 matrix") {
  const std::vector<std::int64_t> costs{17};
  const AssignmentResult result = lap_solve(1, costs);
  CHECK(result.value == 17);
  CHECK(result.assignment == std::vector<int>{0});
}

TEST_CASE("lap rejects non-square input") {
  const std::vector<std::int64_t> costs{1, 2, 3};
  CHECK_THROWS_AS(lap_solve(2, costs), std::invalid_argument);
  CHECK_THROWS_AS(lap_solve(0, std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("lap matches the factorial oracle, including the lexicographic tie-break") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<std::int64_t> costs(static_cast<std::size_t>(n) * n);
    // small value range forces plenty of ties
    for (auto& c : costs) c = static_cast<std::int64_t>(rng() % 8);
    const AssignmentResult got = lap_solve(n, costs);
    const auto [value, assignment] = oracle::lap_brute(n, costs);
    CHECK(got.value == value);
    CHECK(got.assignment == assignment);
  }
}

TEST_CASE("lap accepts negative entries") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<std::int64_t> costs(static_cast<std::size_t>(n) * n);
    for (auto& c : costs) c = static_cast<std::int64_t>(rng() % 21) - 10;
    const AssignmentResult got = lap_solve(n, costs);
    const auto [value, assignment] = oracle::lap_brute(n, costs);
    CHECK(got.value == value);
    CHECK(got.assignment == assignment);
  }
}

TEST_CASE("adding a constant to one row shifts the optimum by that constant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<std::int64_t> costs(static_cast<std::size_t>(n) * n);
    for (auto& c : costs) c = static_cast<std::int64_t>(rng() % 50);
    const std::int64_t base = lap_solve(n, costs).value;
    const int row = static_cast<int>(rng() % n);
    const std::int64_t shift = 1 + static_cast<std::int64_t>(rng() % 9);
    for (int j = 0; j < n; ++j) costs[static_cast<std::size_t>(row) * n + j] += shift;
    CHECK(lap_solve(n, costs).value == base + shift);
  }
}

TEST_CASE("lap value never exceeds a sampled permutation's value") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 8;
    std::vector<std::int64_t> costs(static_cast<std::size_t>(n) * n);
    for (auto& c : costs) c = static_cast<std::int64_t>(rng() % 100);
    const std::int64_t best = lap_solve(n, costs).value;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
      std::int64_t value = 0;
      for (int i = 0; i < n; ++i)
        value += costs[static_cast<std::size_t>(i) * n + perm[i]];
      CHECK(best <= value);
    }
  }
}
