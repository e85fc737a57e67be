#include "sreflp/golden.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "sreflp/bounds.hpp"
#include "sreflp/exact.hpp"
#include "sreflp/instance.hpp"

namespace sreflp {

namespace {

FlowChart comparative_chart() {
  return FlowChart(5, ChartKind::FromTo,
                   {0, 2, 2, 3, 0,  //
                    1, 0, 5, 2, 3,  //
                    6, 1, 0, 4, 2,  //
                    1, 2, 6, 0, 3,  //
                    1, 5, 3, 3, 0});
}

FlowChart experimental_chart() {
  return FlowChart(5, ChartKind::FromTo,
                   {0, 2, 2, 1, 1,  //
                    0, 0, 1, 1, 1,  //
                    0, 1, 0, 4, 2,  //
                    0, 1, 0, 0, 2,  //
                    0, 0, 0, 0, 0});
}

FlowChart instance_o_chart() {
  return FlowChart(5, ChartKind::FromBetween,
                   {0, 1, 5, 5, 7,  //
                    1, 0, 8, 3, 4,  //
                    5, 8, 0, 1, 5,  //
                    5, 3, 1, 0, 7,  //
                    7, 4, 5, 7, 0});
}

// First-matrix reference entries for instance O, [position][facility].
constexpr std::int64_t kInstanceOGl[5][5] = {
    {36, 29, 37, 30, 52},
    {25, 21, 26, 21, 36},
    {24, 20, 25, 20, 32},
    {25, 21, 26, 21, 36},
    {36, 29, 37, 30, 52},
};

void add(std::vector<GoldenCheck>& checks, std::string name,
         std::int64_t expected, std::int64_t actual) {
  checks.push_back({std::move(name), std::to_string(expected),
                    std::to_string(actual), expected == actual});
}

void add_fixture_check(std::vector<GoldenCheck>& checks,
                       const std::filesystem::path& dir, const char* file,
                       const FlowChart& embedded) {
  GoldenCheck check;
  check.name = std::string("fixture ") + file + " matches embedded chart";
  check.expected = "identical chart";
  try {
    std::ifstream in(dir / file);
    if (!in) throw std::runtime_error("cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const FlowChart parsed = parse_instance(buffer.str());
    check.pass = parsed == embedded;
    check.actual = check.pass ? "identical chart" : "chart differs";
  } catch (const std::exception& e) {
    check.pass = false;
    check.actual = std::string("unreadable: ") + e.what();
  }
  checks.push_back(std::move(check));
}

}  // namespace

std::vector<GoldenCheck> run_golden(const std::string& fixtures_dir) {
  std::vector<GoldenCheck> checks;

  {
    const FlowChart chart = comparative_chart();
    const BiDirectional bd = bidirectional_lb(chart);
    add(checks, "comparative forward lb", 56, bd.forward);
    add(checks, "comparative backtrack lb", 28, bd.backtrack);
    add(checks, "comparative bi-directional lb", 84, bd.total);
    const WeightMatrix w = symmetrize(chart);
    add(checks, "comparative enhanced lb", 87, enhanced_lb(w));
    add(checks, "comparative exact optimum", 90, bb_solve(w).optimal_cost);
  }

  {
    const WeightMatrix w = symmetrize(experimental_chart());
    add(checks, "experimental enhanced lb", 32, enhanced_lb(w));
    add(checks, "experimental exact optimum", 32, bb_solve(w).optimal_cost);
  }

  {
    const WeightMatrix w = symmetrize(instance_o_chart());
    const GlMatrix g = gl_matrix(w);
    for (int p = 0; p < 5; ++p)
      for (int f = 0; f < 5; ++f)
        add(checks,
            "instance-o gl P(" + std::to_string(p + 1) + ") F(" +
                std::to_string(f + 1) + ")",
            kInstanceOGl[p][f], g.at(p, f));
    add(checks, "instance-o glb_raw", 142, glb(w).raw);
  }

  if (!fixtures_dir.empty()) {
    const std::filesystem::path dir(fixtures_dir);
    add_fixture_check(checks, dir, "comparative.sreflp", comparative_chart());
    add_fixture_check(checks, dir, "experimental.sreflp", experimental_chart());
    add_fixture_check(checks, dir, "instance_o.sreflp", instance_o_chart());
  }

  return checks;
}

bool all_passed(const std::vector<GoldenCheck>& checks) {
  for (const GoldenCheck& check : checks)
    if (!check.pass) return false;
  return true;
}

}  // namespace sreflp
