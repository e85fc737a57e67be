#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sreflp {

struct AssignmentResult {
  std::vector<int> assignment;  // assignment[row] = column
  std::int64_t value;

  bool operator==(const AssignmentResult&) const = default;
};

/// Exact minimum-cost linear assignment on a square matrix (row-major,
/// costs.size() == n*n).  Among all optimal assignments, returns the
/// lexicographically smallest row-to-column map, so results are reproducible
/// across runs and platforms.  Shortest-augmenting-path with potentials,
/// O(n^3), exact integer arithmetic throughout.
AssignmentResult lap_solve(int n, std::span<const std::int64_t> costs);

}  // namespace sreflp
