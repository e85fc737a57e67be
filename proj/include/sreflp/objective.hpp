#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sreflp/instance.hpp"

namespace sreflp {

using Cost = std::int64_t;

/// An arrangement of facilities on the line: perm[p] is the 0-based facility
/// index at 0-based position p.  Positions are unit-spaced.
struct Layout {
  std::vector<int> perm;

  int size() const { return static_cast<int>(perm.size()); }
  bool operator==(const Layout&) const = default;
};

bool is_permutation(const Layout& layout, int n);

/// "2 3 5 1 4" (1-based facilities in position order) -> Layout.
Layout parse_layout(const std::string& text);
std::string to_string(const Layout& layout);

/// Sum over position pairs p < q of w[perm[p]][perm[q]] * (q - p).
/// Throws std::invalid_argument on dimension mismatch.
Cost layout_cost(const WeightMatrix& w, const Layout& layout);

/// Mirror image; has the same cost as the input for every weight matrix.
Layout reversed(const Layout& layout);

/// The representative of {layout, reversed(layout)} whose first facility
/// index is smaller.  Deterministic reporting form.
Layout canonicalized(const Layout& layout);

/// Ascending multiset of pairwise position distances of any n-layout:
/// value k appears n-k times, k = 1..n-1.
std::vector<int> distance_multiset(int n);

/// Ascending distances from 0-based position p to the other n-1 positions.
std::vector<int> position_distances(int n, int position);

}  // namespace sreflp
