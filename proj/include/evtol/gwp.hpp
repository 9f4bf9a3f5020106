#pragma once

#include "evtol/economics.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

struct GwpBreakdown {
  double energy_cycle_kg = 0.0;   // grid electricity per flight
  double battery_cycle_kg = 0.0;  // amortized pack manufacturing per flight
  double cycle_total_kg = 0.0;
  double energy_share = 0.0;
  double battery_share = 0.0;
  double annual_tons = 0.0;
  double per_ask_kg = 0.0;        // per available seat-kilometer
  double gasoline_car_equiv = 0.0;
  double electric_car_equiv = 0.0;
};

double gwp_energy_cycle(double e_trip_kwh, const EnvironmentConfig& env);

// Pack-manufacturing emissions spread over the flights one pack serves.
double gwp_battery_cycle(double replacements_per_year, double fc_a,
                         double e_design_kwh, const EnvironmentConfig& env);

GwpBreakdown gwp_breakdown(double e_trip_kwh, double e_design_kwh,
                           double replacements_per_year,
                           const Utilization& util, const ScenarioConfig& cfg);

}  // namespace evtol
