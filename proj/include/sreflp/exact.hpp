#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sreflp/instance.hpp"
#include "sreflp/objective.hpp"

namespace sreflp {

enum class Pruning {
  None,      // enumerate every restricted layout
  Enhanced,  // prune with the admissible completion bound
};

enum class SolveMethod { Exhaustive, BranchAndBound };

std::string to_string(SolveMethod method);

struct ExactResult {
  Cost optimal_cost = 0;
  Layout optimal_layout;  // lexicographically smallest optimum
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::Exhaustive;
};

inline constexpr int kDefaultExhaustiveLimit = 12;

/// Enumerates all layouts with first facility < last facility (reversal
/// symmetry halves the space).  Refuses n > max_n via std::invalid_argument.
ExactResult exhaustive_solve(const WeightMatrix& w,
                             int max_n = kDefaultExhaustiveLimit);

/// Depth-first search placing positions left to right.  With
/// Pruning::Enhanced a node is cut when placed cost + cross bound +
/// unplaced-pair bound reaches the incumbent; with Pruning::None the node
/// count equals the exhaustive enumeration count.  nodes_explored counts
/// complete layouts reached.
ExactResult bb_solve(const WeightMatrix& w, Pruning pruning = Pruning::Enhanced);

}  // namespace sreflp
