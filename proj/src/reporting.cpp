#include "sreflp/reporting.hpp"

#include <charconv>
#include <cstdio>

#include "json.hpp"
#include "sreflp/objective.hpp"

namespace sreflp {

namespace {

using nlohmann::json;

std::string one_based(const std::vector<int>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(indices[i] + 1);
  }
  return out;
}

json one_based_json(const std::vector<int>& indices) {
  json arr = json::array();
  for (int x : indices) arr.push_back(x + 1);
  return arr;
}

std::string padded(const char* label) {
  std::string out(label);
  out.resize(14, ' ');
  return out;
}

const char* fullness_name(FullnessTag tag) {
  return tag == FullnessTag::Full ? "full" : "nonfull";
}

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string bounds_text(const BoundsReport& report) {
  std::string out;
  out += padded("n") + std::to_string(report.n) + '\n';
  out += padded("kind") + to_string(report.kind) + '\n';
  if (report.bidirectional) {
    out += padded("forward") + std::to_string(report.bidirectional->forward) + '\n';
    out += padded("backtrack") + std::to_string(report.bidirectional->backtrack) + '\n';
    out += padded("bidirectional") + std::to_string(report.bidirectional->total) + '\n';
  } else {
    out += padded("bidirectional") + "unavailable (symmetric chart)\n";
  }
  out += padded("enhanced") + std::to_string(report.enhanced) + '\n';
  out += padded("glb_raw") + std::to_string(report.glb_raw) + '\n';
  out += padded("glb") + std::to_string(report.glb) + '\n';
  out += padded("assignment") + one_based(report.glb_assignment) + '\n';
  return out;
}

std::string bounds_json(const BoundsReport& report) {
  json j;
  j["n"] = report.n;
  j["kind"] = to_string(report.kind);
  if (report.bidirectional) {
    j["forward"] = report.bidirectional->forward;
    j["backtrack"] = report.bidirectional->backtrack;
    j["bidirectional"] = report.bidirectional->total;
  } else {
    j["forward"] = nullptr;
    j["backtrack"] = nullptr;
    j["bidirectional"] = nullptr;
  }
  j["enhanced"] = report.enhanced;
  j["glb_raw"] = report.glb_raw;
  j["glb"] = report.glb;
  j["glb_assignment"] = one_based_json(report.glb_assignment);
  return j.dump(2) + "\n";
}

std::string bounds_csv(const BoundsReport& report) {
  std::string out = "n,kind,forward,backtrack,bidirectional,enhanced,glb_raw,glb\n";
  out += std::to_string(report.n);
  out += ',';
  out += to_string(report.kind);
  if (report.bidirectional) {
    out += ',' + std::to_string(report.bidirectional->forward);
    out += ',' + std::to_string(report.bidirectional->backtrack);
    out += ',' + std::to_string(report.bidirectional->total);
  } else {
    out += ",,,";
  }
  out += ',' + std::to_string(report.enhanced);
  out += ',' + std::to_string(report.glb_raw);
  out += ',' + std::to_string(report.glb);
  out += '\n';
  return out;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "id,seed,n,fullness,enhanced_lb,glb,bidirectional_lb,scheme_best_cost,"
      "exact_cost,ratio_to_opt,ratio_to_glb,scenario_holds,scenario_confirmed\n";
  for (const ExperimentRow& row : rows) {
    out += std::to_string(row.id);
    out += ',' + std::to_string(row.seed);
    out += ',' + std::to_string(row.n);
    out += ',';
    out += fullness_name(row.fullness);
    out += ',' + std::to_string(row.enhanced_lb);
    out += ',' + std::to_string(row.glb);
    out += ',';
    if (row.bidirectional_lb) out += std::to_string(*row.bidirectional_lb);
    out += ',' + std::to_string(row.scheme_best_cost);
    out += ',';
    if (row.exact_cost) out += std::to_string(*row.exact_cost);
    out += ',';
    if (row.ratio_to_opt) out += format_fixed6(*row.ratio_to_opt);
    out += ',';
    if (row.ratio_to_glb) out += format_fixed6(*row.ratio_to_glb);
    out += ',';
    out += row.scenario_holds ? "true" : "false";
    out += ',';
    if (row.scenario_confirmed) out += *row.scenario_confirmed ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string experiment_json(const ExperimentResult& result) {
  json rows = json::array();
  for (const ExperimentRow& row : result.rows) {
    json j;
    j["id"] = row.id;
    j["seed"] = row.seed;
    j["n"] = row.n;
    j["fullness"] = fullness_name(row.fullness);
    j["enhanced_lb"] = row.enhanced_lb;
    j["glb"] = row.glb;
    j["bidirectional_lb"] =
        row.bidirectional_lb ? json(*row.bidirectional_lb) : json(nullptr);
    j["scheme_best_cost"] = row.scheme_best_cost;
    j["exact_cost"] = row.exact_cost ? json(*row.exact_cost) : json(nullptr);
    j["ratio_to_opt"] = row.ratio_to_opt ? json(*row.ratio_to_opt) : json(nullptr);
    j["ratio_to_glb"] = row.ratio_to_glb ? json(*row.ratio_to_glb) : json(nullptr);
    j["scenario_holds"] = row.scenario_holds;
    j["scenario_confirmed"] =
        row.scenario_confirmed ? json(*row.scenario_confirmed) : json(nullptr);
    j["bounds_ms"] = row.bounds_ms;
    j["scheme_ms"] = row.scheme_ms;
    j["exact_ms"] = row.exact_ms;
    rows.push_back(std::move(j));
  }
  json j;
  j["rows"] = std::move(rows);
  json& s = j["summary"];
  s["rows"] = result.summary.rows;
  s["exact_rows"] = result.summary.exact_rows;
  s["max_ratio_to_opt"] = result.summary.max_ratio_to_opt
                              ? json(*result.summary.max_ratio_to_opt)
                              : json(nullptr);
  s["mean_ratio_to_opt"] = result.summary.mean_ratio_to_opt
                               ? json(*result.summary.mean_ratio_to_opt)
                               : json(nullptr);
  s["ratio_gt_4_3_count"] = result.summary.ratio_gt_4_3_count;
  s["scenario_holds_count"] = result.summary.scenario_holds_count;
  s["scenario_confirmed_count"] = result.summary.scenario_confirmed_count;
  s["counterexample_files"] = result.summary.counterexample_files;
  return j.dump(2) + "\n";
}

std::string summary_text(const ExperimentSummary& summary) {
  std::string out;
  auto line = [&](const char* label, const std::string& value) {
    std::string l(label);
    l.resize(22, ' ');
    out += l + value + '\n';
  };
  line("rows", std::to_string(summary.rows));
  line("exact rows", std::to_string(summary.exact_rows));
  line("max ratio_to_opt", summary.max_ratio_to_opt
                               ? format_fixed6(*summary.max_ratio_to_opt)
                               : std::string("n/a"));
  line("mean ratio_to_opt", summary.mean_ratio_to_opt
                                ? format_fixed6(*summary.mean_ratio_to_opt)
                                : std::string("n/a"));
  line("ratio > 4/3 count", std::to_string(summary.ratio_gt_4_3_count));
  line("scenario holds", std::to_string(summary.scenario_holds_count));
  std::string confirm = std::to_string(summary.scenario_confirmed_count);
  if (summary.scenario_holds_count > 0)
    confirm += " of " + std::to_string(summary.scenario_holds_count) + " (" +
               format_fixed6(100.0 * summary.scenario_confirmed_count /
                             summary.scenario_holds_count) +
               "%)";
  line("scenario confirmed", confirm);
  if (summary.counterexample_files.empty()) {
    line("counterexamples", "none");
  } else {
    for (const std::string& file : summary.counterexample_files)
      line("counterexample", file);
  }
  return out;
}

std::string golden_text(const std::vector<GoldenCheck>& checks) {
  std::string out;
  int passed = 0;
  for (const GoldenCheck& check : checks) {
    if (check.pass) {
      ++passed;
      out += "[PASS] " + check.name + " = " + check.actual + '\n';
    } else {
      out += "[FAIL] " + check.name + ": expected " + check.expected +
             ", got " + check.actual + '\n';
    }
  }
  out += std::to_string(passed) + '/' + std::to_string(checks.size()) +
         " checks passed\n";
  return out;
}

}  // namespace sreflp
