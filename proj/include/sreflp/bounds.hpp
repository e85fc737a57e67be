#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sreflp/instance.hpp"

namespace sreflp {

/// The two directional dot-product bounds and their sum.
struct BiDirectional {
  std::int64_t forward;
  std::int64_t backtrack;
  std::int64_t total;

  bool operator==(const BiDirectional&) const = default;
};

/// Per-(position, facility) lower-bound matrix: at(p, f) bounds the objective
/// contribution of placing facility f at position p.  Rows mirror:
/// at(p, f) == at(n-1-p, f).
struct GlMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major [position][facility]

  std::int64_t at(int position, int facility) const {
    return entries[static_cast<std::size_t>(position) * n + facility];
  }
};

struct GlbResult {
  std::int64_t raw;             // optimum of the assignment relaxation
  std::int64_t bound;           // ceil(raw / 2), valid on the objective scale
  std::vector<int> assignment;  // assignment[position] = facility
};

struct BoundsReport {
  int n = 0;
  ChartKind kind = ChartKind::FromBetween;
  std::optional<BiDirectional> bidirectional;  // absent for symmetric charts
  std::int64_t enhanced = 0;
  std::int64_t glb_raw = 0;
  std::int64_t glb = 0;
  std::vector<int> glb_assignment;
};

/// Forward bound: per-pair larger directed flows, sorted ascending, dotted
/// with the descending distance multiset.  Backtrack: same with the smaller
/// flows.  Requires directed flows; throws std::invalid_argument on
/// from-between charts.
BiDirectional bidirectional_lb(const FlowChart& chart);

/// Descending pair weights dotted with the ascending distance multiset.
std::int64_t enhanced_lb(const WeightMatrix& w);

/// Descending weights of one facility dotted with the ascending distances
/// from one position.  Indices are 0-based; throws on out-of-range.
std::int64_t gl_entry(const WeightMatrix& w, int facility, int position);

/// One row of the matrix: entries for every facility at a fixed position.
std::vector<std::int64_t> gl_row(const WeightMatrix& w, int position);

GlMatrix gl_matrix(const WeightMatrix& w);

/// Assignment-relaxation bound: raw = lap optimum over gl_matrix; every pair
/// weight is counted in two rows, so ceil(raw/2) is valid on the objective
/// scale (integrality makes the ceiling sound).
GlbResult glb(const WeightMatrix& w);

/// All applicable bounds for one chart; the bidirectional part is present
/// only for from-to charts.
BoundsReport bounds_report(const FlowChart& chart);

}  // namespace sreflp
