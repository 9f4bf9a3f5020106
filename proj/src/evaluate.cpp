#include "evtol/evaluate.hpp"

#include <cmath>

namespace evtol {

Objective objective_from_string(const std::string& name) {
  if (name == "max_profit") return Objective::kMaxProfit;
  if (name == "min_toc") return Objective::kMinToc;
  if (name == "min_gwp") return Objective::kMinGwp;
  if (name == "max_fom") return Objective::kMaxFom;
  throw ScenarioError(
      "unknown objective '" + name +
      "' (expected max_profit, min_toc, min_gwp, or max_fom)");
}

std::string objective_to_string(Objective obj) {
  switch (obj) {
    case Objective::kMaxProfit: return "max_profit";
    case Objective::kMinToc: return "min_toc";
    case Objective::kMinGwp: return "min_gwp";
    case Objective::kMaxFom: return "max_fom";
  }
  return "?";
}

std::array<double, ConstraintReport::kCount> ConstraintReport::values() const {
  return {wing_rotor_fit,   vertiport_fit,     mass_margin,
          hover_spl_margin, rpm_margin_hover,  rpm_margin_climb,
          rpm_margin_cruise, speed_margin_climb, speed_margin_cruise};
}

const std::array<const char*, ConstraintReport::kCount>&
ConstraintReport::names() {
  static const std::array<const char*, kCount> kNames = {
      "wing_rotor_fit",   "vertiport_fit",     "mass_margin",
      "hover_spl_margin", "rpm_margin_hover",  "rpm_margin_climb",
      "rpm_margin_cruise", "speed_margin_climb", "speed_margin_cruise"};
  return kNames;
}

std::array<double, ConstraintReport::kCount> ConstraintReport::normalized(
    const LimitsConfig& limits) const {
  const auto v = values();
  const std::array<double, kCount> scales = {
      limits.vertiport_width_m, limits.vertiport_width_m,
      limits.mtom_limit_kg,     limits.spl_hover_limit_db,
      limits.rpm_limit,         limits.rpm_limit,
      limits.rpm_limit,         limits.speed_limit_ms,
      limits.speed_limit_ms};
  std::array<double, kCount> out{};
  for (int i = 0; i < kCount; ++i) {
    out[i] = v[i] / scales[i];
  }
  return out;
}

double ConstraintReport::worst_normalized(const LimitsConfig& limits) const {
  const auto v = normalized(limits);
  double worst = v[0];
  for (double g : v) {
    worst = std::min(worst, g);
  }
  return worst;
}

ConstraintReport evaluate_constraints(const DesignVector& design,
                                      const MassBreakdown& mass,
                                      const MissionResult& mission,
                                      const AcousticState& noise,
                                      const ScenarioConfig& cfg) {
  const LimitsConfig& lim = cfg.limits;
  ConstraintReport g;
  // Three lift rotors per half-span plus clearances and the fuselage must fit
  // under the wing; the full four-abreast footprint must fit on the pad.
  const double packing =
      2.0 * lim.rotor_clearance_m + lim.fuselage_radius_m;
  g.wing_rotor_fit = design.span_m - 2.0 * (3.0 * design.r_hover_m + packing);
  g.vertiport_fit =
      lim.vertiport_width_m - 2.0 * (4.0 * design.r_hover_m + packing);
  g.mass_margin = lim.mtom_limit_kg - mass.mtom_kg;
  g.hover_spl_margin = lim.spl_hover_limit_db - noise.spl_hover_db;
  g.rpm_margin_hover = lim.rpm_limit - mission.hover.rpm;
  g.rpm_margin_climb = lim.rpm_limit - mission.climb.rpm;
  g.rpm_margin_cruise = lim.rpm_limit - mission.cruise.rpm;
  g.speed_margin_climb = lim.speed_limit_ms - mission.climb.speed_ms;
  g.speed_margin_cruise = lim.speed_limit_ms - mission.cruise.speed_ms;
  return g;
}

namespace {

// Per-passenger divisor for inserting the aircraft into the comparison pool.
double pool_pax_basis(const ScenarioConfig& cfg) {
  if (cfg.fom.pax_basis == "seats") {
    return static_cast<double>(cfg.ops.seats);
  }
  return cfg.ops.seats * cfg.ops.load_factor;
}

}  // namespace

FullReport evaluate(const DesignVector& design, const ScenarioConfig& cfg) {
  FullReport r;
  r.design = design;
  r.mass = solve_mtom(design, cfg);
  // Re-fly at the converged mass so every downstream number shares one MTOM.
  r.mission = fly_mission(r.mass.mtom_kg, design, cfg);
  r.noise = assess_noise(design, r.mission, cfg);
  r.battery = battery_ops(r.mission.budget, design.c_charge_per_h,
                          r.mission.flight_time_s, cfg);
  r.util = utilization(r.mission.flight_time_s, r.battery.t_turnaround_h,
                       cfg.ops);
  r.cost = cost_breakdown(r.mission.budget.e_trip_kwh,
                          r.mission.budget.e_design_kwh, r.mass.mtom_kg,
                          r.battery.replacements_per_year, r.util, cfg);
  r.profit_flight = profit_per_flight(r.cost, cfg);
  r.profit_year = profit_annual(r.cost, r.util, cfg);
  r.gwp = gwp_breakdown(r.mission.budget.e_trip_kwh,
                        r.mission.budget.e_design_kwh,
                        r.battery.replacements_per_year, r.util, cfg);

  const double pax = pool_pax_basis(cfg);
  PoolEntry self;
  self.label = kAircraftPoolLabel;
  self.cost_eur = r.cost.toc / pax;
  self.co2_kg = r.gwp.cycle_total_kg / pax;
  self.time_h = r.mission.flight_time_s / 3600.0;
  r.fom_table =
      build_fom_table(baseline_modes(), cfg.mission.trip_distance_m / 1000.0,
                      cfg.fom.weights, {self});
  r.fom_score = r.fom_table.find(kAircraftPoolLabel)->fom;

  r.constraints = evaluate_constraints(design, r.mass, r.mission, r.noise, cfg);
  r.feasible = r.constraints.worst_normalized(cfg.limits) >= -1e-6;
  r.fingerprint = scenario_fingerprint(cfg);
  return r;
}

double objective_reported(const FullReport& report, Objective obj) {
  switch (obj) {
    case Objective::kMaxProfit: return report.profit_year;
    case Objective::kMinToc: return report.cost.toc;
    case Objective::kMinGwp: return report.gwp.annual_tons;
    case Objective::kMaxFom: return report.fom_score;
  }
  return 0.0;
}

double objective_minimized(const FullReport& report, Objective obj) {
  // Scaled to order one so a single convergence tolerance fits all four.
  switch (obj) {
    case Objective::kMaxProfit: return -report.profit_year / 1e6;
    case Objective::kMinToc: return report.cost.toc / 100.0;
    case Objective::kMinGwp: return report.gwp.annual_tons / 100.0;
    case Objective::kMaxFom: return -report.fom_score;
  }
  return 0.0;
}

SafeEvaluation safe_evaluate(const DesignVector& design,
                             const ScenarioConfig& cfg) {
  SafeEvaluation out;
  try {
    out.report = evaluate(design, cfg);
  } catch (const ModelError& e) {
    out.diagnostic = e.what();
  }
  return out;
}

}  // namespace evtol
