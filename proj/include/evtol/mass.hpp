#pragma once

#include <string>
#include <vector>

#include "evtol/scenario.hpp"

namespace evtol {

struct MassBreakdown {
  double mtom_kg = 0.0;
  double empty_kg = 0.0;
  double battery_kg = 0.0;
  double payload_kg = 0.0;
  // Empty-mass components.
  double wing_kg = 0.0;
  double fuselage_kg = 0.0;
  double gear_kg = 0.0;
  double rotor_kg = 0.0;
  double motor_kg = 0.0;
  double systems_kg = 0.0;
  double furnish_kg = 0.0;
  double crew_kg = 0.0;
  double empty_fraction = 0.0;
  double battery_fraction = 0.0;
  // Solver diagnostics.
  int iterations = 0;
  double residual_kg = 0.0;
  // Non-fatal notes, e.g. regression evaluated outside its validity band.
  std::vector<std::string> warnings;
};

struct EmptyMasses {
  double wing_kg = 0.0;
  double fuselage_kg = 0.0;
  double gear_kg = 0.0;
  double rotor_kg = 0.0;
  double motor_kg = 0.0;
  double systems_kg = 0.0;
  double furnish_kg = 0.0;
  double crew_kg = 0.0;
  double total_kg = 0.0;
  bool outside_validity = false;
};

// Sizing payload: per-seat passenger + luggage mass, scaled by seats and the
// sizing load factor (1.0 by default: the sizing mission flies full).
double payload_mass(const ScenarioConfig& cfg);

// Pack mass holding e_trip + e_reserve within the usable fraction of rated
// capacity. Energies in kWh, density in Wh/kg.
double battery_mass(double e_trip_kwh, double e_reserve_kwh,
                    double rho_battery_wh_kg, double usable_fraction);

// Conceptual-design component regressions. p_lift_kw is the total lift-rotor
// power, p_pusher_kw the larger of the climb/cruise pusher demands; the motor
// regression applies the sizing margin to their sum.
EmptyMasses empty_mass(const DesignVector& design, double mtom_kg,
                       double p_lift_kw, double p_pusher_kw,
                       const ScenarioConfig& cfg);

// MTOM as the fixed point of mass -> mission energy -> battery + empty mass.
// Does not enforce the certification mass limit; that is an optimizer
// constraint. Throws ModelError(kMassDivergence) when the loop fails to
// settle within the configured iteration budget.
MassBreakdown solve_mtom(const DesignVector& design, const ScenarioConfig& cfg);
MassBreakdown solve_mtom(const DesignVector& design, const ScenarioConfig& cfg,
                         double initial_guess_kg);

}  // namespace evtol
