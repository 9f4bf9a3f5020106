#include "evtol/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "evtol/lsq.hpp"

namespace evtol {

namespace {

constexpr int kN = DesignVector::kSize;
constexpr int kM = ConstraintReport::kCount;
constexpr double kInf = std::numeric_limits<double>::infinity();

using VecN = Eigen::Matrix<double, kN, 1>;
using VecM = Eigen::Matrix<double, kM, 1>;
using MatMN = Eigen::Matrix<double, kM, kN>;
using MatNN = Eigen::Matrix<double, kN, kN>;

struct PointEval {
  bool ok = false;
  double f = 0.0;  // scaled objective, minimized
  VecM g = VecM::Zero();
  std::string diagnostic;
};

double violation(const PointEval& p) {
  double v = 0.0;
  for (int i = 0; i < kM; ++i) v += std::max(0.0, -p.g(i));
  return v;
}

double merit(const PointEval& p, double mu) {
  if (!p.ok) return kInf;
  return p.f + mu * violation(p);
}

VecN clamp01(const VecN& u) {
  VecN out;
  for (int i = 0; i < kN; ++i) out(i) = std::clamp(u(i), 0.0, 1.0);
  return out;
}

// Wraps the model with normalization, objective scaling, and bookkeeping of
// the best feasible point seen across the entire run.
class Problem {
 public:
  Problem(const ScenarioConfig& cfg, Objective obj) : cfg_(cfg), obj_(obj) {}

  PointEval eval(const VecN& u_raw, int start_index) {
    ++evaluations_;
    const VecN u = clamp01(u_raw);
    std::array<double, kN> z;
    for (int i = 0; i < kN; ++i) z[i] = u(i);
    const SafeEvaluation se = safe_evaluate(denormalize_design(z, cfg_.bounds), cfg_);
    PointEval pe;
    if (!se.report) {
      pe.diagnostic = se.diagnostic;
      return pe;
    }
    pe.ok = true;
    pe.f = objective_minimized(*se.report, obj_);
    const auto gn = se.report->constraints.normalized(cfg_.limits);
    for (int i = 0; i < kM; ++i) pe.g(i) = gn[i];
    if (se.report->feasible && (!has_best_ || pe.f < best_f_)) {
      has_best_ = true;
      best_f_ = pe.f;
      best_report_ = *se.report;
      best_start_ = start_index;
    }
    return pe;
  }

  int evaluations() const { return evaluations_; }
  bool has_best() const { return has_best_; }
  double best_f() const { return best_f_; }
  const FullReport& best_report() const { return best_report_; }
  int best_start() const { return best_start_; }

 private:
  const ScenarioConfig& cfg_;
  Objective obj_;
  int evaluations_ = 0;
  bool has_best_ = false;
  double best_f_ = kInf;
  FullReport best_report_;
  int best_start_ = -1;
};

// Central differences on a stencil shifted to stay inside the unit box; falls
// back to one-sided against the center when a neighbor fails to evaluate.
bool fd_gradient(Problem& prob, const VecN& u, const PointEval& center,
                 double h, int start_index, VecN* grad_f, MatMN* jac_g) {
  for (int i = 0; i < kN; ++i) {
    const double up = std::min(u(i) + h, 1.0);
    const double um = std::max(u(i) - h, 0.0);
    VecN xp = u, xm = u;
    xp(i) = up;
    xm(i) = um;
    const PointEval pp = prob.eval(xp, start_index);
    const PointEval pm = prob.eval(xm, start_index);
    if (pp.ok && pm.ok && up > um) {
      const double den = up - um;
      (*grad_f)(i) = (pp.f - pm.f) / den;
      jac_g->col(i) = (pp.g - pm.g) / den;
    } else if (pp.ok && up > u(i)) {
      const double den = up - u(i);
      (*grad_f)(i) = (pp.f - center.f) / den;
      jac_g->col(i) = (pp.g - center.g) / den;
    } else if (pm.ok && u(i) > um) {
      const double den = u(i) - um;
      (*grad_f)(i) = (center.f - pm.f) / den;
      jac_g->col(i) = (center.g - pm.g) / den;
    } else {
      return false;
    }
  }
  return true;
}

struct QpSolution {
  bool ok = false;
  VecN d = VecN::Zero();
  VecM lambda = VecM::Zero();  // multipliers of the model constraints only
};

// Minimize 1/2 d'Bd + grad'd subject to linearized constraints and the unit
// box. Infeasible linearizations are relaxed by scaling back the requested
// correction of the violated rows; beta = 0 always admits d = 0.
QpSolution solve_qp(const MatNN& B, const VecN& grad_f, const MatMN& jac_g,
                    const PointEval& center, const VecN& u) {
  QpSolution sol;
  Eigen::LLT<MatNN> llt(B);
  if (llt.info() != Eigen::Success) return sol;
  const MatNN L = llt.matrixL();
  const Eigen::MatrixXd A = L.transpose();
  const Eigen::VectorXd rhs = L.template triangularView<Eigen::Lower>().solve(
      Eigen::VectorXd(-grad_f));

  const int rows = kM + 2 * kN;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows, kN);
  Eigen::VectorXd h(rows);
  G.topRows(kM) = jac_g;
  for (int i = 0; i < kN; ++i) {
    G(kM + i, i) = 1.0;
    h(kM + i) = -u(i);
    G(kM + kN + i, i) = -1.0;
    h(kM + kN + i) = u(i) - 1.0;
  }

  for (const double beta : {1.0, 0.5, 0.25, 0.1, 0.0}) {
    for (int i = 0; i < kM; ++i) {
      const double gi = center.g(i);
      h(i) = (gi >= 0.0) ? -gi : beta * (-gi);
    }
    const auto lsi = constrained_lsq(A, rhs, G, h);
    if (lsi) {
      sol.ok = true;
      sol.d = lsi->x;
      for (int i = 0; i < kM && i < lsi->multipliers.size(); ++i) {
        sol.lambda(i) = lsi->multipliers(i);
      }
      return sol;
    }
  }
  return sol;
}

struct SqpOutcome {
  VecN u = VecN::Zero();
  PointEval final;
  bool converged = false;
  int iterations = 0;
  std::string note;
  std::vector<IterationRecord> history;
};

SqpOutcome run_sqp(Problem& prob, const VecN& u0, const OptimizerOptions& opts,
                   int start_index) {
  SqpOutcome out;
  VecN u = clamp01(u0);
  PointEval c = prob.eval(u, start_index);
  if (!c.ok) {
    out.u = u;
    out.note = "start rejected: " + c.diagnostic;
    return out;
  }

  MatNN B = MatNN::Identity();
  double mu = 1.0;
  bool have_prev = false;
  VecN s_prev = VecN::Zero();
  VecN grad_prev = VecN::Zero();
  MatMN jac_prev = MatMN::Zero();
  VecM lambda_prev = VecM::Zero();
  int small_changes = 0;

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    out.iterations = iter;
    VecN grad_f;
    MatMN jac_g;
    if (!fd_gradient(prob, u, c, opts.fd_step, start_index, &grad_f, &jac_g)) {
      out.note = "gradient stencil left the model domain";
      break;
    }

    // Damped BFGS update with the step taken to reach the current point.
    if (have_prev) {
      const VecN y_raw = (grad_f - jac_g.transpose() * lambda_prev) -
                         (grad_prev - jac_prev.transpose() * lambda_prev);
      const double sBs = s_prev.dot(B * s_prev);
      double sy = s_prev.dot(y_raw);
      if (std::isfinite(sBs) && sBs > 1e-16) {
        VecN y = y_raw;
        if (sy < 0.2 * sBs) {
          const double theta = 0.8 * sBs / (sBs - sy);
          y = theta * y_raw + (1.0 - theta) * (B * s_prev);
          sy = s_prev.dot(y);
        }
        if (sy > 1e-12) {
          const VecN Bs = B * s_prev;
          B += (y * y.transpose()) / sy - (Bs * Bs.transpose()) / sBs;
        }
      }
    }

    const QpSolution qp = solve_qp(B, grad_f, jac_g, c, u);
    if (!qp.ok) {
      out.note = "quadratic subproblem unsolvable";
      break;
    }
    mu = std::max({mu, 2.0 * qp.lambda.maxCoeff(), 1.0});

    const double viol = violation(c);
    const double dnorm = qp.d.template lpNorm<Eigen::Infinity>();
    const double descent = grad_f.dot(qp.d) - mu * viol;
    if (viol <= opts.feasibility_tol &&
        (dnorm < 1e-9 || std::abs(descent) < opts.tol)) {
      out.converged = true;
      out.history.push_back({iter, c.f, c.g.minCoeff(), 0.0, merit(c, mu)});
      break;
    }

    double alpha = 1.0;
    bool accepted = false;
    VecN u_next;
    PointEval c_next;
    const double m0 = merit(c, mu);
    for (int trial = 0; trial < 30; ++trial) {
      u_next = clamp01(u + alpha * qp.d);
      c_next = prob.eval(u_next, start_index);
      if (c_next.ok &&
          merit(c_next, mu) <= m0 + 0.1 * alpha * std::min(descent, 0.0)) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (viol <= opts.feasibility_tol) {
        out.converged = true;  // no merit progress available at a feasible point
      } else {
        out.note = "line search exhausted at an infeasible point";
      }
      out.history.push_back({iter, c.f, c.g.minCoeff(), 0.0, m0});
      break;
    }

    s_prev = u_next - u;
    grad_prev = grad_f;
    jac_prev = jac_g;
    lambda_prev = qp.lambda;
    have_prev = true;

    const double fdrop = std::abs(c_next.f - c.f);
    const double vnext = violation(c_next);
    u = u_next;
    c = c_next;
    out.history.push_back(
        {iter, c.f, c.g.minCoeff(), s_prev.template lpNorm<Eigen::Infinity>(),
         merit(c, mu)});

    if (vnext <= opts.feasibility_tol && fdrop < opts.tol && alpha == 1.0) {
      if (++small_changes >= 2) {
        out.converged = true;
        break;
      }
    } else {
      small_changes = 0;
    }
  }

  out.u = u;
  out.final = c;
  return out;
}

}  // namespace

std::vector<DesignVector> latin_hypercube(int samples,
                                          const DesignBounds& bounds,
                                          std::uint64_t seed) {
  if (samples <= 0) return {};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const auto bb = bounds_array(bounds);

  std::vector<std::array<double, kN>> pts(samples);
  std::vector<int> strata(samples);
  for (int j = 0; j < kN; ++j) {
    std::iota(strata.begin(), strata.end(), 0);
    std::shuffle(strata.begin(), strata.end(), rng);
    for (int i = 0; i < samples; ++i) {
      const double frac = (strata[i] + u01(rng)) / samples;
      pts[i][j] = bb[j].lo + frac * (bb[j].hi - bb[j].lo);
    }
  }
  std::vector<DesignVector> out;
  out.reserve(samples);
  for (const auto& p : pts) out.push_back(DesignVector::from_array(p));
  return out;
}

OptimizationResult optimize(const ScenarioConfig& cfg, Objective objective,
                            const OptimizerOptions& opts) {
  OptimizationResult result;
  result.objective = objective;
  result.seed = opts.seed;

  Problem prob(cfg, objective);
  const auto start_designs =
      latin_hypercube(std::max(1, opts.starts), cfg.bounds, opts.seed);

  for (int s = 0; s < static_cast<int>(start_designs.size()); ++s) {
    const auto z0 = normalize_design(start_designs[s], cfg.bounds);
    VecN u0;
    for (int i = 0; i < kN; ++i) u0(i) = z0[i];

    const int evals_before = prob.evaluations();
    SqpOutcome run = run_sqp(prob, u0, opts, s);

    // A rejected start sits where the model itself fails (for example a mass
    // loop that diverges); redraw nearby-uniform replacements until one
    // evaluates. Seeded per start, so the whole run stays deterministic.
    DesignVector initial = start_designs[s];
    if (!run.final.ok) {
      std::mt19937_64 redraw(opts.seed ^ (0x9E3779B97F4A7C15ull * (s + 1)));
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      for (int attempt = 0; attempt < 20 && !run.final.ok; ++attempt) {
        std::array<double, kN> z;
        for (int i = 0; i < kN; ++i) {
          u0(i) = u01(redraw);
          z[i] = u0(i);
        }
        initial = denormalize_design(z, cfg.bounds);
        run = run_sqp(prob, u0, opts, s);
      }
    }

    StartTrace trace;
    trace.start_index = s;
    trace.initial = initial;
    std::array<double, kN> zf;
    for (int i = 0; i < kN; ++i) zf[i] = run.u(i);
    trace.final = denormalize_design(zf, cfg.bounds);
    trace.converged = run.converged;
    trace.iterations = run.iterations;
    trace.evaluations = prob.evaluations() - evals_before;
    trace.note = run.note;
    trace.history = run.history;
    if (run.final.ok) {
      trace.objective_scaled = run.final.f;
      trace.worst_constraint = run.final.g.minCoeff();
      trace.feasible = trace.worst_constraint >= -opts.feasibility_tol;
    } else {
      trace.objective_scaled = kInf;
      trace.worst_constraint = -kInf;
    }
    result.starts.push_back(std::move(trace));
  }

  result.total_evaluations = prob.evaluations();

  if (prob.has_best()) {
    result.success = true;
    result.best_report = prob.best_report();
    result.best_design = result.best_report.design;
    result.best_scaled = prob.best_f();
    result.best_value = objective_reported(result.best_report, objective);
    result.best_start = prob.best_start();
    int converged_feasible = 0;
    for (const auto& t : result.starts) {
      if (t.converged && t.feasible) ++converged_feasible;
    }
    result.message = std::to_string(converged_feasible) + " of " +
                     std::to_string(result.starts.size()) +
                     " starts converged feasible; best " +
                     objective_to_string(objective) + " = " +
                     std::to_string(result.best_value);
  } else {
    result.success = false;
    result.message =
        "no feasible design found in any start; relax the constraint limits "
        "or widen the design bounds";
    // Report the least-violating final point anyway so the caller can see
    // how far from feasibility the search ended.
    int least_bad = -1;
    double best_w = -kInf;
    for (int s = 0; s < static_cast<int>(result.starts.size()); ++s) {
      if (result.starts[s].worst_constraint > best_w) {
        best_w = result.starts[s].worst_constraint;
        least_bad = s;
      }
    }
    if (least_bad >= 0) {
      result.best_design = result.starts[least_bad].final;
      result.best_start = least_bad;
      const SafeEvaluation se = safe_evaluate(result.best_design, cfg);
      if (se.report) {
        result.best_report = *se.report;
        result.best_value = objective_reported(result.best_report, objective);
        result.best_scaled = objective_minimized(result.best_report, objective);
      }
    }
  }
  return result;
}

std::vector<SweepPoint> sweep(const ScenarioConfig& cfg,
                              const DesignVector& base, int var_index,
                              double from, double to, int steps) {
  if (var_index < 0 || var_index >= DesignVector::kSize) {
    throw ScenarioError("sweep variable index out of range");
  }
  if (steps < 2) {
    throw ScenarioError("sweep needs at least two steps");
  }
  std::vector<SweepPoint> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double v = from + (to - from) * static_cast<double>(i) /
                                static_cast<double>(steps - 1);
    auto arr = base.as_array();
    arr[static_cast<std::size_t>(var_index)] = v;
    SweepPoint p;
    p.value = v;
    p.eval = safe_evaluate(DesignVector::from_array(arr), cfg);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace evtol
