#include "sreflp/instance.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <string_view>
#include <utility>

namespace sreflp {

namespace {

constexpr int kMaxFacilities = 10000;

struct SourceLine {
  int number = 0;  // 1-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Comment-stripped, non-blank lines with their original 1-based numbers.
std::vector<SourceLine> significant_lines(std::string_view text, int& total_lines) {
  std::vector<SourceLine> lines;
  total_lines = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    if (nl == std::string_view::npos && raw.empty() && pos == text.size()) break;
    ++total_lines;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({total_lines, raw});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_int64(std::string_view tok, std::int64_t& value) {
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end;
}

bool is_symmetric(int n, const std::vector<std::int64_t>& e) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e[static_cast<std::size_t>(i) * n + j] != e[static_cast<std::size_t>(j) * n + i])
        return false;
  return true;
}

bool is_upper_triangular(int n, const std::vector<std::int64_t>& e) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (e[static_cast<std::size_t>(i) * n + j] != 0) return false;
  return true;
}

// Unbiased uniform draw in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform double in [0, 1) with 53 random bits.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(ChartKind kind) {
  return kind == ChartKind::FromTo ? "ftc" : "fbc";
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

FlowChart::FlowChart(int n, ChartKind kind, std::vector<std::int64_t> entries)
    : n_(n), kind_(kind), entries_(std::move(entries)) {
  if (n_ < 2) throw std::invalid_argument("facility count must be at least 2");
  if (n_ > kMaxFacilities)
    throw std::invalid_argument("facility count exceeds supported maximum " +
                                std::to_string(kMaxFacilities));
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("entry count does not match matrix size");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const std::int64_t v = at(i, j);
      if (v < 0) throw std::invalid_argument("negative entry");
      if (i == j && v != 0) throw std::invalid_argument("nonzero diagonal");
    }
  }
  if (kind_ == ChartKind::FromBetween && !is_symmetric(n_, entries_) &&
      !is_upper_triangular(n_, entries_))
    throw std::invalid_argument(
        "from-between chart must be symmetric or upper-triangular");
}

WeightMatrix::WeightMatrix(int n, std::vector<std::int64_t> weights)
    : n_(n), w_(std::move(weights)) {
  if (n_ < 2) throw std::invalid_argument("facility count must be at least 2");
  if (w_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("entry count does not match matrix size");
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) throw std::invalid_argument("nonzero diagonal");
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) < 0) throw std::invalid_argument("negative entry");
      if (at(i, j) != at(j, i))
        throw std::invalid_argument("weight matrix must be symmetric");
    }
  }
}

std::vector<std::int64_t> WeightMatrix::upper_triangle() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.push_back(at(i, j));
  return out;
}

FlowChart parse_instance(const std::string& text) {
  int total_lines = 0;
  const std::vector<SourceLine> lines = significant_lines(text, total_lines);
  const int eof_line = total_lines == 0 ? 1 : total_lines;
  std::size_t cursor = 0;

  auto next_line = [&](const char* what) -> const SourceLine& {
    if (cursor >= lines.size())
      throw ParseError(eof_line, std::string("malformed header: missing ") + what);
    return lines[cursor++];
  };

  {
    const SourceLine& l = next_line("'sreflp 1' signature");
    if (l.text != "sreflp 1")
      throw ParseError(l.number, "malformed header: expected 'sreflp 1'");
  }

  std::int64_t n64 = 0;
  {
    const SourceLine& l = next_line("'n <count>' line");
    const auto fields = split_fields(l.text);
    if (fields.size() != 2 || fields[0] != "n" || !parse_int64(fields[1], n64))
      throw ParseError(l.number, "malformed header: expected 'n <count>'");
    if (n64 < 2)
      throw ParseError(l.number, "facility count must be at least 2");
    if (n64 > kMaxFacilities)
      throw ParseError(l.number, "facility count exceeds supported maximum " +
                                     std::to_string(kMaxFacilities));
  }
  const int n = static_cast<int>(n64);

  ChartKind kind = ChartKind::FromTo;
  {
    const SourceLine& l = next_line("'kind ftc|fbc' line");
    const auto fields = split_fields(l.text);
    if (fields.size() != 2 || fields[0] != "kind" ||
        (fields[1] != "ftc" && fields[1] != "fbc"))
      throw ParseError(l.number, "malformed header: expected 'kind ftc|fbc'");
    kind = fields[1] == "ftc" ? ChartKind::FromTo : ChartKind::FromBetween;
  }

  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  int first_row_line = eof_line;
  for (int i = 0; i < n; ++i) {
    if (cursor >= lines.size())
      throw ParseError(eof_line, "non-square matrix: expected " +
                                     std::to_string(n) + " rows, found " +
                                     std::to_string(i));
    const SourceLine& l = lines[cursor++];
    if (i == 0) first_row_line = l.number;
    const auto fields = split_fields(l.text);
    if (static_cast<int>(fields.size()) != n)
      throw ParseError(l.number, "non-square matrix: row has " +
                                     std::to_string(fields.size()) +
                                     " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      std::int64_t v = 0;
      if (!parse_int64(fields[j], v))
        throw ParseError(l.number, "malformed matrix entry '" +
                                       std::string(fields[j]) + "'");
      if (v < 0) throw ParseError(l.number, "negative entry");
      if (i == j && v != 0) throw ParseError(l.number, "nonzero diagonal");
      entries.push_back(v);
    }
  }
  if (cursor < lines.size())
    throw ParseError(lines[cursor].number, "unexpected content after matrix");

  try {
    return FlowChart(n, kind, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(first_row_line, e.what());
  }
}

std::string write_instance(const FlowChart& chart) {
  const int n = chart.size();
  std::string out = "sreflp 1\nn " + std::to_string(n) + "\nkind " +
                    to_string(chart.kind()) + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += std::to_string(chart.at(i, j));
    }
    out += '\n';
  }
  return out;
}

WeightMatrix symmetrize(const FlowChart& chart) {
  const int n = chart.size();
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n, 0);
  const bool as_is = chart.kind() == ChartKind::FromBetween &&
                     is_symmetric(n, chart.entries());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t v =
          as_is ? chart.at(i, j) : chart.at(i, j) + chart.at(j, i);
      w[static_cast<std::size_t>(i) * n + j] = v;
      w[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return WeightMatrix(n, std::move(w));
}

Fullness classify(const WeightMatrix& w) {
  int zeros = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w.at(i, j) == 0) ++zeros;
  return {zeros == 0 ? FullnessTag::Full : FullnessTag::NonFull, zeros};
}

FlowChart generate_instance(std::uint64_t seed, int n, std::int64_t max_weight,
                            double zero_density) {
  if (n < 2) throw std::invalid_argument("facility count must be at least 2");
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
  if (!(zero_density >= 0.0 && zero_density < 1.0))
    throw std::invalid_argument("zero_density must lie in [0, 1)");

  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // One fixed draw order per pair keeps the stream layout-independent.
      const bool zeroed = unit_double(rng) < zero_density;
      const std::int64_t weight =
          1 + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
      const std::int64_t v = zeroed ? 0 : weight;
      entries[static_cast<std::size_t>(i) * n + j] = v;
      entries[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return FlowChart(n, ChartKind::FromBetween, std::move(entries));
}

}  // namespace sreflp
