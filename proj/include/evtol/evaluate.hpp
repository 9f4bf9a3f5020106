#pragma once

#include <array>
#include <optional>
#include <string>

#include "evtol/acoustics.hpp"
#include "evtol/battery.hpp"
#include "evtol/economics.hpp"
#include "evtol/fom.hpp"
#include "evtol/gwp.hpp"
#include "evtol/mass.hpp"
#include "evtol/mission.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

enum class Objective { kMaxProfit, kMinToc, kMinGwp, kMaxFom };

Objective objective_from_string(const std::string& name);  // throws ScenarioError
std::string objective_to_string(Objective obj);

// Inequality constraints, reported as slack (feasible means >= 0).
struct ConstraintReport {
  static constexpr int kCount = 9;

  double wing_rotor_fit = 0.0;   // span minus the lift rotors it must host
  double vertiport_fit = 0.0;    // pad width minus the full rotor footprint
  double mass_margin = 0.0;      // certification mass limit minus MTOM
  double hover_spl_margin = 0.0;
  double rpm_margin_hover = 0.0;
  double rpm_margin_climb = 0.0;
  double rpm_margin_cruise = 0.0;
  double speed_margin_climb = 0.0;
  double speed_margin_cruise = 0.0;

  std::array<double, kCount> values() const;
  static const std::array<const char*, kCount>& names();
  // Slacks divided by their limit magnitudes, so one feasibility tolerance
  // applies across meters, kilograms, decibels, rpm, and m/s.
  std::array<double, kCount> normalized(const LimitsConfig& limits) const;
  double worst_normalized(const LimitsConfig& limits) const;
};

// Everything the pipeline knows about one design, in evaluation order.
struct FullReport {
  DesignVector design;
  MassBreakdown mass;
  MissionResult mission;
  AcousticState noise;
  BatteryOps battery;
  Utilization util;
  CostBreakdown cost;
  double profit_flight = 0.0;
  double profit_year = 0.0;
  GwpBreakdown gwp;
  FomTable fom_table;      // comparison pool with this aircraft inserted
  double fom_score = 0.0;  // this aircraft's aggregate rating
  ConstraintReport constraints;
  bool feasible = false;
  std::string fingerprint;
};

// Label of the aircraft row inside FullReport::fom_table.
inline constexpr const char* kAircraftPoolLabel = "aircraft";

ConstraintReport evaluate_constraints(const DesignVector& design,
                                      const MassBreakdown& mass,
                                      const MissionResult& mission,
                                      const AcousticState& noise,
                                      const ScenarioConfig& cfg);

// Full chain: size the mass, fly the mission, assess noise, battery wear,
// utilization, costs, emissions, and the cross-transport rating. Throws
// ModelError for out-of-bounds designs or model-domain failures.
FullReport evaluate(const DesignVector& design, const ScenarioConfig& cfg);

// Objective as a minimization value on a roughly unit scale (used by the
// optimizer), and in natural reporting units/sign.
double objective_minimized(const FullReport& report, Objective obj);
double objective_reported(const FullReport& report, Objective obj);

// Evaluation that never throws: model failures come back as a diagnostic
// plus a penalty, so optimizer line searches can step through bad regions.
struct SafeEvaluation {
  std::optional<FullReport> report;
  std::string diagnostic;  // empty on success
};
SafeEvaluation safe_evaluate(const DesignVector& design,
                             const ScenarioConfig& cfg);

}  // namespace evtol
