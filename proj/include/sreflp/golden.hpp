#pragma once

#include <string>
#include <vector>

namespace sreflp {

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Reproduces every reference value on the embedded worked examples:
/// forward/backtrack/bi-directional 56/28/84, enhanced 87, optimum 90 on the
/// comparative instance; enhanced 32, optimum 32 on the experimental
/// instance; all 25 first-matrix entries and raw assignment optimum 142 on
/// instance O.  When fixtures_dir is non-empty the on-disk fixture files are
/// also parsed and compared against the embedded charts.
std::vector<GoldenCheck> run_golden(const std::string& fixtures_dir = {});

bool all_passed(const std::vector<GoldenCheck>& checks);

}  // namespace sreflp
