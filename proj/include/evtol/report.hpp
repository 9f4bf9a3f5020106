#pragma once

#include <string>
#include <vector>

#include "evtol/evaluate.hpp"
#include "evtol/optimizer.hpp"

namespace evtol {

// Serialization of pipeline results. JSON outputs carry a schema_version and
// the scenario fingerprint and are byte-stable: the same inputs always
// produce the same text, so reports can be diffed and regression-tested.

inline constexpr int kReportSchemaVersion = 1;

std::string report_to_json_text(const FullReport& report,
                                const ScenarioConfig& cfg, int indent = 2);
std::string optimization_to_json_text(const OptimizationResult& result,
                                      const ScenarioConfig& cfg,
                                      int indent = 2);

// Human-readable console summaries.
std::string report_summary_text(const FullReport& report,
                                const ScenarioConfig& cfg);
std::string optimization_summary_text(const OptimizationResult& result,
                                      const ScenarioConfig& cfg);

// CSV emitters. All include a header row.
std::string fom_table_csv(const FomTable& table);
std::string sweep_csv(const std::vector<SweepPoint>& points,
                      const std::string& var_name);
std::string optimizer_trace_csv(const OptimizationResult& result);

// Model-vs-requirement comparison against the benchmark column configured in
// the scenario.
struct BenchmarkRow {
  std::string metric;
  std::string unit;
  double model = 0.0;
  double requirement = 0.0;
};

std::vector<BenchmarkRow> benchmark_rows(const FullReport& report,
                                         const ScenarioConfig& cfg);
std::string benchmark_csv(const FullReport& report, const ScenarioConfig& cfg);
std::string benchmark_text(const FullReport& report, const ScenarioConfig& cfg);

}  // namespace evtol
