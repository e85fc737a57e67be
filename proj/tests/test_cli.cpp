#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sreflp/instance.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the installed binary with stderr discarded and captures stdout.
CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SREFLP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliRun run;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    run.out.append(buffer, got);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

std::string fixture(const char* name) {
  return std::string(SREFLP_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli bounds prints every bound for a directed chart") {
  const CliRun run = run_cli("bounds " + fixture("comparative.sreflp"));
  CHECK(run.status == 0);
  CHECK(contains(run.out, "84"));
  CHECK(contains(run.out, "87"));
  CHECK(contains(run.out, "56"));
  CHECK(contains(run.out, "28"));
}

TEST_CASE("cli bounds handles symmetric charts and other formats") {
  CHECK(contains(run_cli("bounds " + fixture("instance_o.sreflp")).out, "142"));
  const CliRun json =
      run_cli("bounds " + fixture("instance_o.sreflp") + " --format json");
  CHECK(json.status == 0);
  CHECK(contains(json.out, "\"glb_raw\": 142"));
  const CliRun csv =
      run_cli("bounds " + fixture("comparative.sreflp") + " --format csv");
  CHECK(csv.status == 0);
  CHECK(contains(csv.out, "n,kind,forward,backtrack,bidirectional,enhanced,glb_raw,glb"));
}

TEST_CASE("cli bounds fails cleanly on a missing file") {
  CHECK(run_cli("bounds no_such_file.sreflp").status == 1);
}

TEST_CASE("cli exact solves and respects the size guard") {
  const CliRun run = run_cli("exact " + fixture("comparative.sreflp"));
  CHECK(run.status == 0);
  CHECK(contains(run.out, "90"));
  CHECK(contains(run.out, "1 3 4 2 5"));
  CHECK(run_cli("exact " + fixture("comparative.sreflp") + " --max-n 4").status == 1);
}

TEST_CASE("cli approx reports strategies, shipping facility and ratio") {
  const CliRun run = run_cli("approx " + fixture("instance_o.sreflp"));
  CHECK(run.status == 0);
  CHECK(contains(run.out, "cost 75"));
  CHECK(contains(run.out, "shipping   2"));

  const CliRun with_exact =
      run_cli("approx " + fixture("instance_o.sreflp") + " --exact");
  CHECK(with_exact.status == 0);
  CHECK(contains(with_exact.out, "1.000000"));
}

TEST_CASE("cli golden passes on the bundled fixtures") {
  const CliRun run = run_cli("golden --fixtures " + std::string(SREFLP_FIXTURE_DIR));
  CHECK(run.status == 0);
  CHECK(contains(run.out, "[PASS]"));
  CHECK_FALSE(contains(run.out, "[FAIL]"));
}

TEST_CASE("cli golden flags a corrupted fixture with exit code 2") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sreflp_cli_bad_fixtures";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "comparative.sreflp");
    out << "sreflp 1\nn 2\nkind ftc\n0 1\n1 0\n";
  }
  const CliRun run = run_cli("golden --fixtures " + dir.string());
  CHECK(run.status == 2);
  CHECK(contains(run.out, "[FAIL]"));
  fs::remove_all(dir);
}

TEST_CASE("cli gen emits a parsable, reproducible instance") {
  const CliRun first = run_cli("gen --n 6 --seed 9 --zero-density 0.25");
  const CliRun second = run_cli("gen --n 6 --seed 9 --zero-density 0.25");
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  const sreflp::FlowChart chart = sreflp::parse_instance(first.out);
  CHECK(chart.size() == 6);
  CHECK(chart == sreflp::generate_instance(9, 6, 10, 0.25));
}

TEST_CASE("cli experiment streams stable csv to stdout") {
  namespace fs = std::filesystem;
  const fs::path dump = fs::temp_directory_path() / "sreflp_cli_dumps";
  fs::create_directories(dump);
  const std::string args =
      "experiment --count 4 --seed 7 --n-min 5 --n-max 6 --dump-dir " + dump.string();
  const CliRun first = run_cli(args);
  const CliRun second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(contains(first.out, "id,seed,n,fullness"));
  int lines = 0;
  for (char c : first.out) lines += c == '\n';
  CHECK(lines == 5);

  const CliRun empty = run_cli("experiment --count 0 --dump-dir " + dump.string());
  CHECK(empty.status == 0);
  int empty_lines = 0;
  for (char c : empty.out) empty_lines += c == '\n';
  CHECK(empty_lines == 1);
  fs::remove_all(dump);
}

TEST_CASE("cli usage errors exit with code 1") {
  CHECK(run_cli("").status == 1);
  CHECK(run_cli("frobnicate").status == 1);
  CHECK(run_cli("--help").status == 0);
}
