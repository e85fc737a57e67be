#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sreflp/bounds.hpp"
#include "sreflp/exact.hpp"
#include "sreflp/experiment.hpp"
#include "sreflp/golden.hpp"
#include "sreflp/instance.hpp"
#include "sreflp/objective.hpp"
#include "sreflp/reporting.hpp"
#include "sreflp/scheme.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

sreflp::FlowChart load_chart(const std::string& path) {
  try {
    return sreflp::parse_instance(read_file(path));
  } catch (const sreflp::ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

sreflp::FillRule fill_from(const std::string& name) {
  return name == "greedy" ? sreflp::FillRule::Greedy : sreflp::FillRule::Rank;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? text.size() - pos : comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed strategy list '" + text + "'");
    ids.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ids;
}

std::string label(const char* name) {
  std::string out(name);
  out.resize(11, ' ');
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-row equidistant facility layout toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds for one instance");
  std::string bounds_file, bounds_format = "text";
  bounds_cmd->add_option("file", bounds_file, "instance file")->required();
  bounds_cmd->add_option("--format", bounds_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  bounds_cmd->callback([&] {
    const sreflp::BoundsReport report =
        sreflp::bounds_report(load_chart(bounds_file));
    if (bounds_format == "json")
      std::cout << sreflp::bounds_json(report);
    else if (bounds_format == "csv")
      std::cout << sreflp::bounds_csv(report);
    else
      std::cout << sreflp::bounds_text(report);
  });

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "solve one instance exactly");
  std::string exact_file, prune = "enhanced";
  int exact_max_n = 12;
  exact_cmd->add_option("file", exact_file, "instance file")->required();
  exact_cmd->add_option("--prune", prune, "pruning mode")
      ->check(CLI::IsMember({"none", "enhanced"}))
      ->capture_default_str();
  exact_cmd->add_option("--max-n", exact_max_n, "largest instance accepted")
      ->capture_default_str();
  exact_cmd->callback([&] {
    const sreflp::WeightMatrix w = sreflp::symmetrize(load_chart(exact_file));
    if (w.size() > exact_max_n)
      throw std::runtime_error("n=" + std::to_string(w.size()) +
                               " exceeds --max-n " + std::to_string(exact_max_n) +
                               "; raise --max-n to force the search");
    const auto start = Clock::now();
    const sreflp::ExactResult result = sreflp::bb_solve(
        w, prune == "none" ? sreflp::Pruning::None : sreflp::Pruning::Enhanced);
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::cout << label("cost") << result.optimal_cost << '\n'
              << label("layout") << sreflp::to_string(result.optimal_layout) << '\n'
              << label("nodes") << result.nodes_explored << '\n'
              << label("method") << sreflp::to_string(result.method) << '\n'
              << label("time_ms") << sreflp::format_fixed6(ms) << '\n';
  });

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "five-strategy scheme");
  std::string approx_file, fill = "rank", strategies = "0,1,2,3,4";
  bool with_exact = false;
  approx_cmd->add_option("file", approx_file, "instance file")->required();
  approx_cmd->add_option("--fill", fill, "facility fill rule")
      ->check(CLI::IsMember({"rank", "greedy"}))
      ->capture_default_str();
  approx_cmd->add_option("--strategies", strategies, "comma-separated ids in 0..4")
      ->capture_default_str();
  approx_cmd->add_flag("--exact", with_exact, "also solve exactly and report the ratio");
  approx_cmd->callback([&] {
    const sreflp::WeightMatrix w = sreflp::symmetrize(load_chart(approx_file));
    const sreflp::StrategyResult result =
        sreflp::run_strategies(w, fill_from(fill), parse_id_list(strategies));
    for (const sreflp::StrategyOutcome& outcome : result.outcomes)
      std::cout << "strategy " << outcome.strategy_id << "  cost "
                << outcome.cost << "  layout " << sreflp::to_string(outcome.layout)
                << '\n';
    std::cout << label("best") << "strategy " << result.best().strategy_id
              << "  cost " << result.best().cost << '\n'
              << label("shipping") << result.shipping_facility + 1 << '\n'
              << label("fill") << sreflp::to_string(result.fill) << '\n';
    if (with_exact) {
      const sreflp::ExactResult exact = sreflp::bb_solve(w);
      std::cout << label("exact") << exact.optimal_cost << '\n';
      if (exact.optimal_cost > 0)
        std::cout << label("ratio")
                  << sreflp::format_fixed6(
                         static_cast<double>(result.best().cost) /
                         static_cast<double>(exact.optimal_cost))
                  << '\n';
    }
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::int64_t gen_max_weight = 10;
  double gen_zero_density = 0.0;
  std::string gen_out;
  gen_cmd->add_option("--n", gen_n, "facility count")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("--max-weight", gen_max_weight, "largest pair weight")
      ->capture_default_str();
  gen_cmd->add_option("--zero-density", gen_zero_density,
                      "probability a pair weight is zero")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_cmd->callback([&] {
    const std::string text = sreflp::write_instance(
        sreflp::generate_instance(gen_seed, gen_n, gen_max_weight, gen_zero_density));
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open file '" + gen_out + "'");
      out << text;
    }
  });

  // golden
  auto* golden_cmd = app.add_subcommand("golden", "reproduce the reference values");
  std::string fixtures_dir;
  golden_cmd->add_option("--fixtures", fixtures_dir,
                         "fixture directory (default: ./fixtures when present)");
  golden_cmd->callback([&] {
    std::string dir = fixtures_dir;
    if (dir.empty() && golden_cmd->count("--fixtures") == 0 &&
        std::filesystem::is_directory("fixtures"))
      dir = "fixtures";
    const std::vector<sreflp::GoldenCheck> checks = sreflp::run_golden(dir);
    std::cout << sreflp::golden_text(checks);
    exit_code = sreflp::all_passed(checks) ? 0 : 2;
  });

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "seeded ratio experiment");
  sreflp::ExperimentConfig config;
  config.count = 100;
  config.dump_dir = ".";
  std::string exp_fill = "rank", exp_format = "csv";
  exp_cmd->add_option("--count", config.count, "instances to run")
      ->capture_default_str();
  exp_cmd->add_option("--n-min", config.n_min, "smallest n")->capture_default_str();
  exp_cmd->add_option("--n-max", config.n_max, "largest n")->capture_default_str();
  exp_cmd->add_option("--seed", config.seed, "base seed")->capture_default_str();
  exp_cmd->add_option("--zero-density", config.zero_density,
                      "probability a pair weight is zero")
      ->capture_default_str();
  exp_cmd->add_option("--max-weight", config.max_weight, "largest pair weight")
      ->capture_default_str();
  exp_cmd->add_option("--fill", exp_fill, "facility fill rule")
      ->check(CLI::IsMember({"rank", "greedy"}))
      ->capture_default_str();
  exp_cmd->add_option("--exact-limit", config.exact_limit,
                      "solve exactly when n is at most this")
      ->capture_default_str();
  exp_cmd->add_option("--dump-dir", config.dump_dir,
                      "where counterexample instances are written")
      ->capture_default_str();
  exp_cmd->add_option("--format", exp_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  exp_cmd->callback([&] {
    config.fill = fill_from(exp_fill);
    const sreflp::ExperimentResult result = sreflp::run_experiment(config);
    if (exp_format == "json") {
      std::cout << sreflp::experiment_json(result);
    } else {
      // Summary goes to stderr so the CSV stream stays byte-stable.
      std::cout << sreflp::experiment_csv(result.rows);
      std::cerr << sreflp::summary_text(result.summary);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const sreflp::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
