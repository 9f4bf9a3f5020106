#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evtol/evaluate.hpp"

namespace evtol {

struct OptimizerOptions {
  std::uint64_t seed = 2024;
  int starts = 16;
  int max_iterations = 150;   // SQP iterations per start
  double fd_step = 1e-4;      // finite-difference step in normalized space
  double tol = 1e-8;          // convergence threshold on the scaled objective
  double feasibility_tol = 1e-6;  // on normalized constraint slack
};

// Per-start history, one row per SQP iteration (for the trace CSV).
struct IterationRecord {
  int iteration = 0;
  double objective_scaled = 0.0;
  double worst_constraint = 0.0;  // normalized slack, negative = violated
  double step_norm = 0.0;
  double merit = 0.0;
};

struct StartTrace {
  int start_index = 0;
  DesignVector initial;
  DesignVector final;
  double objective_scaled = 0.0;
  double objective_value = 0.0;   // in reporting units
  double worst_constraint = 0.0;
  bool feasible = false;
  bool converged = false;
  int iterations = 0;
  int evaluations = 0;
  std::string note;               // nonempty when the start was abandoned
  std::vector<IterationRecord> history;
};

struct OptimizationResult {
  Objective objective = Objective::kMinToc;
  bool success = false;           // a feasible optimum was found
  DesignVector best_design;
  FullReport best_report;         // meaningful only when success
  double best_value = 0.0;        // reporting units
  double best_scaled = 0.0;
  int best_start = -1;
  std::uint64_t seed = 0;
  int total_evaluations = 0;
  std::string message;            // human-readable outcome line
  std::vector<StartTrace> starts;
};

// Stratified uniform design samples over the bounds box, one stratum per
// sample along every axis. Deterministic for a given seed.
std::vector<DesignVector> latin_hypercube(int samples,
                                          const DesignBounds& bounds,
                                          std::uint64_t seed);

// Multistart SQP over the six design variables. Dense BFGS quadratic model,
// linearized constraints solved as a constrained least-squares subproblem,
// L1 merit line search. The returned best point is never worse than the best
// feasible point seen anywhere during the run (including audit-style starts),
// and success is false when every start ends infeasible.
OptimizationResult optimize(const ScenarioConfig& cfg, Objective objective,
                            const OptimizerOptions& opts = {});

struct SweepPoint {
  double value = 0.0;
  SafeEvaluation eval;
};

// One-variable sweep holding the rest of the design fixed. var_index follows
// DesignVector order.
std::vector<SweepPoint> sweep(const ScenarioConfig& cfg,
                              const DesignVector& base, int var_index,
                              double from, double to, int steps);

}  // namespace evtol
