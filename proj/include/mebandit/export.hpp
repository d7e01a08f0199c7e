#pragma once

// Trace CSV / meta.json files, the Table-1 style summary CSV and the SVG
// regret-curve chart.

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mebandit/harness.hpp"

namespace mebandit {

std::string trace_csv_header(int context_dim);
// Header plus one row per step, doubles at 17 significant digits, LF endings.
std::string format_trace_csv(const RunTrace& trace);
void export_csv(const RunTrace& trace, const std::filesystem::path& path);  // throws IoError

struct TraceTable {
  int context_dim = 0;
  std::vector<StepOutcome> steps;
  std::vector<double> cumulative;
};
TraceTable read_trace_csv(const std::filesystem::path& path);  // IoError on bad files

// "<algorithm>__<environment>__seed<S>"
std::string trace_stem(const RunTrace& trace);

// Writes <stem>.csv and <stem>.meta.json into `dir` (created if needed).
// Returns the CSV path.
std::filesystem::path write_run(const RunTrace& trace, const RunConfig& config,
                                const std::filesystem::path& dir);

struct RunSummary {
  std::string algorithm;
  std::string environment;
  std::uint64_t seed = 0;
  std::string config_hash;
  bool valid = true;
  std::string error;
  double final_regret = 0.0;
  std::filesystem::path csv;
};

// Every *.meta.json in `dir`, sorted by (environment, algorithm, seed).
std::vector<RunSummary> scan_runs(const std::filesystem::path& dir);

using CellKey = std::pair<std::string, std::string>;  // (algorithm, environment)
std::map<CellKey, CellStats> aggregate_runs(const std::vector<RunSummary>& runs);

// Rows are algorithms, columns <env>_mean/_std/_best/_runs/_invalid for the
// environments in the standard order. Missing cells are left empty.
std::string format_table(const std::map<CellKey, CellStats>& cells);
void export_table(const std::map<CellKey, CellStats>& cells, const std::filesystem::path& path);

struct CurveSeries {
  std::string label;
  std::vector<double> values;  // cumulative regret per step
};
std::string format_svg(const std::vector<CurveSeries>& series);
void export_svg(const std::vector<CurveSeries>& series, const std::filesystem::path& path);

}  // namespace mebandit
