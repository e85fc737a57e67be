#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sreflp {

/// How the flow entries of a chart are to be read.
enum class ChartKind {
  FromTo,       ///< directed flows, entry (i,j) is the flow from i to j
  FromBetween,  ///< pair flows, stored upper-triangular or fully symmetric
};

const char* to_string(ChartKind kind);

/// Raised by parse_instance; line() is the 1-based line the diagnostic
/// refers to (also embedded in what()).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Square nonnegative integer flow matrix with zero diagonal, tagged with a
/// ChartKind.  Immutable after construction; the constructor enforces all
/// invariants (n >= 2, shape, sign, diagonal, from-between storage form).
class FlowChart {
 public:
  FlowChart(int n, ChartKind kind, std::vector<std::int64_t> entries);

  int size() const { return n_; }
  ChartKind kind() const { return kind_; }
  std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  bool operator==(const FlowChart&) const = default;

 private:
  int n_;
  ChartKind kind_;
  std::vector<std::int64_t> entries_;  // row-major n x n
};

/// Symmetric nonnegative pair-weight matrix with zero diagonal; the
/// canonical internal form every bound and solver works on.
class WeightMatrix {
 public:
  WeightMatrix(int n, std::vector<std::int64_t> weights);

  int size() const { return n_; }
  std::int64_t at(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& weights() const { return w_; }

  /// Pair weights w_ij for i < j in row-major order, n(n-1)/2 values.
  std::vector<std::int64_t> upper_triangle() const;

  bool operator==(const WeightMatrix&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> w_;
};

enum class FullnessTag { Full, NonFull };

struct Fullness {
  FullnessTag tag;
  int zero_pair_count;  // unordered pairs with weight zero

  bool operator==(const Fullness&) const = default;
};

/// Parse the line-oriented instance format (see write_instance for the exact
/// shape).  Full-line comments start with '#'; blank lines are ignored.
/// Throws ParseError with a distinct diagnostic naming the offending line.
FlowChart parse_instance(const std::string& text);

/// Serialize a chart to the canonical file form:
///   sreflp 1
///   n <count>
///   kind ftc|fbc
///   <n rows of n space-separated entries>
/// parse_instance(write_instance(c)) == c for every valid chart.
std::string write_instance(const FlowChart& chart);

/// Reduce a chart to the symmetric weight matrix: from-to charts sum the two
/// directions (w_ij = f_ij + f_ji); from-between charts stored symmetrically
/// are taken as-is, triangular ones are mirrored.
WeightMatrix symmetrize(const FlowChart& chart);

/// Full iff every off-diagonal pair weight is positive.
Fullness classify(const WeightMatrix& w);

/// Deterministic seeded from-between instance: each unordered pair is zeroed
/// with probability zero_density, otherwise weighted uniformly in
/// [1, max_weight].  zero_density = 0 always yields a Full instance.
FlowChart generate_instance(std::uint64_t seed, int n, std::int64_t max_weight,
                            double zero_density);

}  // namespace sreflp
