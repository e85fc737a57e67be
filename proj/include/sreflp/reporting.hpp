#pragma once

#include <string>
#include <vector>

#include "sreflp/bounds.hpp"
#include "sreflp/experiment.hpp"
#include "sreflp/golden.hpp"

namespace sreflp {

/// Shortest-round-trip double formatting with exactly six decimals, locale-
/// independent (std::to_chars), e.g. 1.333333.
std::string format_fixed6(double v);

std::string bounds_text(const BoundsReport& report);
std::string bounds_json(const BoundsReport& report);
std::string bounds_csv(const BoundsReport& report);

/// Header + one line per row; deterministic columns only (no wall times), so
/// repeated runs with the same arguments are byte-identical.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

/// Rows plus summary and per-stage wall times.
std::string experiment_json(const ExperimentResult& result);

std::string summary_text(const ExperimentSummary& summary);

std::string golden_text(const std::vector<GoldenCheck>& checks);

}  // namespace sreflp
