#include "sreflp/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "sreflp/lap.hpp"
#include "sreflp/objective.hpp"

namespace sreflp {

namespace {

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<int>& b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

// Facility's weights to all others, descending.
std::vector<std::int64_t> facility_flows_desc(const WeightMatrix& w, int f) {
  std::vector<std::int64_t> flows;
  flows.reserve(w.size() - 1);
  for (int q = 0; q < w.size(); ++q)
    if (q != f) flows.push_back(w.at(f, q));
  std::sort(flows.begin(), flows.end(), std::greater<>());
  return flows;
}

}  // namespace

BiDirectional bidirectional_lb(const FlowChart& chart) {
  if (chart.kind() != ChartKind::FromTo)
    throw std::invalid_argument("directed flows required");
  const int n = chart.size();
  std::vector<std::int64_t> hi, lo;
  hi.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  lo.reserve(hi.capacity());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      hi.push_back(std::max(chart.at(i, j), chart.at(j, i)));
      lo.push_back(std::min(chart.at(i, j), chart.at(j, i)));
    }
  }
  std::sort(hi.begin(), hi.end());
  std::sort(lo.begin(), lo.end());
  std::vector<int> dist = distance_multiset(n);
  std::reverse(dist.begin(), dist.end());
  BiDirectional out{dot(hi, dist), dot(lo, dist), 0};
  out.total = out.forward + out.backtrack;
  return out;
}

std::int64_t enhanced_lb(const WeightMatrix& w) {
  std::vector<std::int64_t> weights = w.upper_triangle();
  std::sort(weights.begin(), weights.end(), std::greater<>());
  return dot(weights, distance_multiset(w.size()));
}

std::int64_t gl_entry(const WeightMatrix& w, int facility, int position) {
  if (facility < 0 || facility >= w.size())
    throw std::out_of_range("facility out of range");
  return dot(facility_flows_desc(w, facility),
             position_distances(w.size(), position));
}

std::vector<std::int64_t> gl_row(const WeightMatrix& w, int position) {
  const std::vector<int> dist = position_distances(w.size(), position);
  std::vector<std::int64_t> row(w.size());
  for (int f = 0; f < w.size(); ++f)
    row[f] = dot(facility_flows_desc(w, f), dist);
  return row;
}

GlMatrix gl_matrix(const WeightMatrix& w) {
  const int n = w.size();
  GlMatrix g{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n)};
  std::vector<std::vector<std::int64_t>> flows(n);
  for (int f = 0; f < n; ++f) flows[f] = facility_flows_desc(w, f);
  // Mirror positions share a distance multiset, so only the left half is
  // computed.
  for (int p = 0; p * 2 < n; ++p) {
    const std::vector<int> dist = position_distances(n, p);
    for (int f = 0; f < n; ++f) {
      const std::int64_t e = dot(flows[f], dist);
      g.entries[static_cast<std::size_t>(p) * n + f] = e;
      g.entries[static_cast<std::size_t>(n - 1 - p) * n + f] = e;
    }
  }
  return g;
}

GlbResult glb(const WeightMatrix& w) {
  const GlMatrix g = gl_matrix(w);
  AssignmentResult lap = lap_solve(g.n, g.entries);
  return {lap.value, (lap.value + 1) / 2, std::move(lap.assignment)};
}

BoundsReport bounds_report(const FlowChart& chart) {
  BoundsReport report;
  report.n = chart.size();
  report.kind = chart.kind();
  const WeightMatrix w = symmetrize(chart);
  report.enhanced = enhanced_lb(w);
  GlbResult g = glb(w);
  report.glb_raw = g.raw;
  report.glb = g.bound;
  report.glb_assignment = std::move(g.assignment);
  if (chart.kind() == ChartKind::FromTo)
    report.bidirectional = bidirectional_lb(chart);
  return report;
}

}  // namespace sreflp
