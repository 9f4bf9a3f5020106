#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evtol/evaluate.hpp"
#include "evtol/optimizer.hpp"
#include "evtol/report.hpp"

namespace {

// Exit codes, also documented in docs/file_formats.md.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitOptimizerFailure = 3;

bool file_exists(const std::string& path) {
  std::ifstream probe(path);
  return probe.good();
}

// Relative scenario paths that do not resolve from the working directory are
// retried under $EVTOL_SCENARIO_DIR.
std::string resolve_scenario_path(const std::string& path) {
  if (file_exists(path)) return path;
  const char* dir = std::getenv("EVTOL_SCENARIO_DIR");
  if (dir != nullptr && !path.empty() && path.front() != '/') {
    const std::string alt = std::string(dir) + "/" + path;
    if (file_exists(alt)) return alt;
  }
  return path;
}

evtol::ScenarioConfig load_scenario_or_default(const std::string& path) {
  if (path.empty()) return evtol::ScenarioConfig{};
  return evtol::load_scenario(resolve_scenario_path(path));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw evtol::ScenarioError("cannot write output file: " + path);
  }
  out << text;
}

std::array<double, 3> parse_weights(const std::string& text,
                                    const std::array<double, 3>& fallback) {
  if (text.empty()) return fallback;
  std::array<double, 3> w;
  char extra = 0;
  const int n =
      std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &w[0], &w[1], &w[2], &extra);
  if (n != 3) {
    throw evtol::ScenarioError(
        "--weights expects three comma-separated numbers, e.g. 0.5,0.3,0.2");
  }
  const double sum = w[0] + w[1] + w[2];
  if (std::abs(sum - 1.0) > 1e-6) {
    throw evtol::ScenarioError("--weights must sum to 1");
  }
  return w;
}

int design_var_index(const std::string& name) {
  const auto& names = evtol::DesignVector::names();
  for (int i = 0; i < evtol::DesignVector::kSize; ++i) {
    if (name == names[i]) return i;
  }
  std::string known;
  for (const char* n : names) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw evtol::ScenarioError("unknown design variable '" + name +
                             "' (one of: " + known + ")");
}

void print_fom_table(const evtol::FomTable& table) {
  std::printf("%4s  %-22s %10s %9s %8s %7s %7s %7s %7s\n", "rank", "mode",
              "cost_eur", "co2_kg", "time_h", "r_cost", "r_co2", "r_time",
              "fom");
  for (const auto& row : table.rows) {
    std::printf("%4d  %-22s %10.2f %9.3f %8.3f %7.2f %7.2f %7.2f %7.3f\n",
                row.rank, row.label.c_str(), row.cost_eur, row.co2_kg,
                row.time_h, row.r_cost, row.r_co2, row.r_time, row.fom);
  }
}

struct EvaluateArgs {
  std::string design, scenario, out;
  bool json = false;
};

int run_evaluate(const EvaluateArgs& a) {
  const evtol::ScenarioConfig cfg = load_scenario_or_default(a.scenario);
  const evtol::DesignVector design = evtol::load_design(a.design);
  const evtol::FullReport report = evtol::evaluate(design, cfg);
  const std::string json = evtol::report_to_json_text(report, cfg);
  if (!a.out.empty()) write_text(a.out, json);
  if (a.json) {
    std::cout << json;
  } else {
    std::cout << evtol::report_summary_text(report, cfg);
  }
  return report.feasible ? kExitOk : kExitInfeasible;
}

struct OptimizeArgs {
  std::string objective, scenario, out, trace;
  std::uint64_t seed = 2024;
  int starts = 16;
  int audit = 0;
};

int run_optimize(const OptimizeArgs& a) {
  const evtol::ScenarioConfig cfg = load_scenario_or_default(a.scenario);
  const evtol::Objective obj = evtol::objective_from_string(a.objective);
  evtol::OptimizerOptions opts;
  opts.seed = a.seed;
  opts.starts = a.starts;
  const evtol::OptimizationResult result = evtol::optimize(cfg, obj, opts);

  if (!a.out.empty()) {
    write_text(a.out, evtol::optimization_to_json_text(result, cfg));
  }
  if (!a.trace.empty()) {
    write_text(a.trace, evtol::optimizer_trace_csv(result));
  }
  std::cout << evtol::optimization_summary_text(result, cfg);

  if (a.audit > 0) {
    // Independent spot check: a space-filling sample must not beat the
    // optimizer. Uses a different stream than the start points.
    const auto samples =
        evtol::latin_hypercube(a.audit, cfg.bounds, a.seed + 1);
    double audit_best = std::numeric_limits<double>::infinity();
    int feasible_count = 0;
    for (const auto& d : samples) {
      const evtol::SafeEvaluation se = evtol::safe_evaluate(d, cfg);
      if (se.report && se.report->feasible) {
        ++feasible_count;
        audit_best =
            std::min(audit_best, evtol::objective_minimized(*se.report, obj));
      }
    }
    std::printf("audit: %d of %d samples feasible\n", feasible_count, a.audit);
    if (feasible_count > 0 && result.success) {
      std::printf("audit: optimizer %s the audit best (%.6g vs %.6g scaled)\n",
                  result.best_scaled <= audit_best ? "matches or beats"
                                                   : "LOSES TO",
                  result.best_scaled, audit_best);
    }
  }
  return result.success ? kExitOk : kExitOptimizerFailure;
}

struct SweepArgs {
  std::string var, design, scenario, out;
  double from = 0.0, to = 0.0;
  int steps = 25;
};

int run_sweep(const SweepArgs& a) {
  const evtol::ScenarioConfig cfg = load_scenario_or_default(a.scenario);
  evtol::DesignVector base;
  if (!a.design.empty()) base = evtol::load_design(a.design);
  const int var = design_var_index(a.var);
  const auto points = evtol::sweep(cfg, base, var, a.from, a.to, a.steps);
  const std::string csv = evtol::sweep_csv(points, a.var);
  if (!a.out.empty()) {
    write_text(a.out, csv);
    int ok = 0;
    for (const auto& p : points) ok += p.eval.report ? 1 : 0;
    std::printf("swept %s over [%g, %g] in %d steps (%d evaluable); wrote %s\n",
                a.var.c_str(), a.from, a.to, a.steps, ok, a.out.c_str());
  } else {
    std::cout << csv;
  }
  return kExitOk;
}

struct CompareArgs {
  std::string design, scenario, modes_csv, weights, out;
  double distance_km = 0.0;
};

int run_compare(const CompareArgs& a) {
  const evtol::ScenarioConfig cfg = load_scenario_or_default(a.scenario);
  const double trip_km = cfg.mission.trip_distance_m / 1000.0;
  const double distance = a.distance_km > 0.0 ? a.distance_km : trip_km;
  const auto weights = parse_weights(a.weights, cfg.fom.weights);
  const std::vector<evtol::TransportMode> modes =
      a.modes_csv.empty() ? evtol::baseline_modes()
                          : evtol::load_modes_csv(a.modes_csv);

  std::vector<evtol::PoolEntry> extra;
  if (!a.design.empty()) {
    const evtol::DesignVector design = evtol::load_design(a.design);
    const evtol::FullReport report = evtol::evaluate(design, cfg);
    const evtol::FomRow* self = report.fom_table.find(evtol::kAircraftPoolLabel);
    extra.push_back({self->label, self->cost_eur, self->co2_kg, self->time_h});
    if (std::abs(distance - trip_km) > 1e-9) {
      std::fprintf(stderr,
                   "warning: pool distance %.3f km differs from the %.3f km "
                   "mission the aircraft was evaluated on\n",
                   distance, trip_km);
    }
  }

  const evtol::FomTable table =
      evtol::build_fom_table(modes, distance, weights, extra);
  print_fom_table(table);
  if (!a.out.empty()) write_text(a.out, evtol::fom_table_csv(table));
  return kExitOk;
}

struct BenchmarkArgs {
  std::string design, scenario, out;
};

int run_benchmark(const BenchmarkArgs& a) {
  const evtol::ScenarioConfig cfg = load_scenario_or_default(a.scenario);
  const evtol::DesignVector design = evtol::load_design(a.design);
  const evtol::FullReport report = evtol::evaluate(design, cfg);
  std::cout << evtol::benchmark_text(report, cfg);
  if (!a.out.empty()) write_text(a.out, evtol::benchmark_csv(report, cfg));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conceptual eVTOL sizing, economics, and design optimization"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* cmd_ev = app.add_subcommand(
      "evaluate", "size one design and report every model output");
  cmd_ev->add_option("--design", ev.design, "design JSON file")->required();
  cmd_ev->add_option("--scenario", ev.scenario,
                     "scenario JSON file (default: built-in scenario)");
  cmd_ev->add_option("--out", ev.out, "write the report JSON to this file");
  cmd_ev->add_flag("--json", ev.json,
                   "print JSON to stdout instead of the text summary");

  OptimizeArgs op;
  auto* cmd_op = app.add_subcommand(
      "optimize", "multistart search for the best feasible design");
  cmd_op->add_option("--objective", op.objective,
                     "max_profit | min_toc | min_gwp | max_fom")
      ->required();
  cmd_op->add_option("--scenario", op.scenario, "scenario JSON file");
  cmd_op->add_option("--seed", op.seed, "random seed for the start points");
  cmd_op->add_option("--starts", op.starts, "number of multistart runs")
      ->check(CLI::PositiveNumber);
  cmd_op->add_option("--audit", op.audit,
                     "cross-check against this many space-filling samples");
  cmd_op->add_option("--out", op.out, "write the result JSON to this file");
  cmd_op->add_option("--trace", op.trace,
                     "write the per-iteration trace CSV to this file");

  SweepArgs sw;
  auto* cmd_sw = app.add_subcommand(
      "sweep", "vary one design variable and tabulate the model outputs");
  cmd_sw->add_option("--var", sw.var, "design variable name")->required();
  cmd_sw->add_option("--from", sw.from, "start value")->required();
  cmd_sw->add_option("--to", sw.to, "end value")->required();
  cmd_sw->add_option("--steps", sw.steps, "sample count (default 25)");
  cmd_sw->add_option("--design", sw.design,
                     "base design JSON (default: mid-range design)");
  cmd_sw->add_option("--scenario", sw.scenario, "scenario JSON file");
  cmd_sw->add_option("--out", sw.out, "write CSV here instead of stdout");

  CompareArgs cp;
  auto* cmd_cp = app.add_subcommand(
      "compare", "rate transport modes (optionally with a design inserted)");
  cmd_cp->add_option("--design", cp.design,
                     "design JSON to insert into the pool");
  cmd_cp->add_option("--scenario", cp.scenario, "scenario JSON file");
  cmd_cp->add_option("--distance-km", cp.distance_km,
                     "trip distance for the pool (default: mission distance)");
  cmd_cp->add_option("--weights", cp.weights,
                     "cost,co2,time weights, e.g. 0.5,0.3,0.2");
  cmd_cp->add_option("--modes-csv", cp.modes_csv,
                     "transport mode pool CSV (default: built-in pool)");
  cmd_cp->add_option("--out", cp.out, "write the rated pool CSV here");

  BenchmarkArgs bm;
  auto* cmd_bm = app.add_subcommand(
      "benchmark", "compare a sized design against the requirement column");
  cmd_bm->add_option("--design", bm.design, "design JSON file")->required();
  cmd_bm->add_option("--scenario", bm.scenario, "scenario JSON file");
  cmd_bm->add_option("--out", bm.out, "write the comparison CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (cmd_ev->parsed()) return run_evaluate(ev);
    if (cmd_op->parsed()) return run_optimize(op);
    if (cmd_sw->parsed()) return run_sweep(sw);
    if (cmd_cp->parsed()) return run_compare(cp);
    if (cmd_bm->parsed()) return run_benchmark(bm);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
