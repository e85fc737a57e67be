#include "sreflp/objective.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sreflp {

bool is_permutation(const Layout& layout, int n) {
  if (layout.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int f : layout.perm) {
    if (f < 0 || f >= n || seen[f]) return false;
    seen[f] = 1;
  }
  return true;
}

Layout parse_layout(const std::string& text) {
  Layout layout;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i == start) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
    if (ec != std::errc() || ptr != text.data() + i)
      throw std::invalid_argument("malformed layout entry '" +
                                  text.substr(start, i - start) + "'");
    layout.perm.push_back(value - 1);
  }
  if (layout.perm.empty() || !is_permutation(layout, layout.size()))
    throw std::invalid_argument("layout is not a permutation of 1..n");
  return layout;
}

std::string to_string(const Layout& layout) {
  std::string out;
  for (int p = 0; p < layout.size(); ++p) {
    if (p) out += ' ';
    out += std::to_string(layout.perm[p] + 1);
  }
  return out;
}

Cost layout_cost(const WeightMatrix& w, const Layout& layout) {
  const int n = w.size();
  if (!is_permutation(layout, n))
    throw std::invalid_argument("layout does not match instance size");
  Cost total = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      total += w.at(layout.perm[p], layout.perm[q]) * (q - p);
  return total;
}

Layout reversed(const Layout& layout) {
  Layout out = layout;
  std::reverse(out.perm.begin(), out.perm.end());
  return out;
}

Layout canonicalized(const Layout& layout) {
  if (!layout.perm.empty() && layout.perm.front() > layout.perm.back())
    return reversed(layout);
  return layout;
}

std::vector<int> distance_multiset(int n) {
  if (n < 2) throw std::invalid_argument("facility count must be at least 2");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int k = 1; k < n; ++k)
    for (int c = 0; c < n - k; ++c) out.push_back(k);
  return out;
}

std::vector<int> position_distances(int n, int position) {
  if (position < 0 || position >= n)
    throw std::out_of_range("position out of range");
  std::vector<int> out;
  out.reserve(n - 1);
  for (int q = 0; q < n; ++q)
    if (q != position) out.push_back(q < position ? position - q : q - position);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sreflp
