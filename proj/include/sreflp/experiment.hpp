#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sreflp/instance.hpp"
#include "sreflp/objective.hpp"
#include "sreflp/scheme.hpp"

namespace sreflp {

/// Thrown when a computed bound exceeds an exact optimum — a solver bug, so
/// the whole run aborts instead of emitting a bogus row.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  int count = 0;
  int n_min = 5;
  int n_max = 8;
  std::uint64_t seed = 1;
  std::int64_t max_weight = 10;
  double zero_density = 0.0;
  FillRule fill = FillRule::Rank;
  int exact_limit = 12;  // rows with n above this skip the exact solve
  // Directory for counterexample dumps (ratio > 4/3, missed scenario);
  // empty disables dumping.
  std::string dump_dir;
};

struct ExperimentRow {
  int id = 0;
  std::uint64_t seed = 0;  // per-instance generator seed
  int n = 0;
  FullnessTag fullness = FullnessTag::Full;
  std::int64_t enhanced_lb = 0;
  std::int64_t glb = 0;
  std::optional<std::int64_t> bidirectional_lb;  // FTC-generated rows only
  Cost scheme_best_cost = 0;
  std::optional<Cost> exact_cost;
  std::optional<double> ratio_to_opt;   // absent when no exact solve or opt 0
  std::optional<double> ratio_to_glb;   // absent when glb 0
  bool scenario_holds = false;
  std::optional<bool> scenario_confirmed;
  // Wall times are reported in JSON/summary output only; the CSV keeps just
  // the deterministic columns so fixed seeds diff byte-stable.
  double bounds_ms = 0.0;
  double scheme_ms = 0.0;
  double exact_ms = 0.0;
};

struct ExperimentSummary {
  int rows = 0;
  int exact_rows = 0;
  std::optional<double> max_ratio_to_opt;
  std::optional<double> mean_ratio_to_opt;
  int ratio_gt_4_3_count = 0;
  int scenario_holds_count = 0;
  int scenario_confirmed_count = 0;
  std::vector<std::string> counterexample_files;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  ExperimentSummary summary;
};

/// Generates config.count seeded instances (row k uses seed config.seed + k,
/// n = n_min + k mod span), runs bounds/scheme/exact on each, and aggregates.
/// Rows violating enhanced_lb <= exact or glb <= exact raise
/// InvariantViolation.  Ratio > 4/3 rows and holds-but-unconfirmed rows are
/// dumped to config.dump_dir as .sreflp files and listed in the summary.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace sreflp
