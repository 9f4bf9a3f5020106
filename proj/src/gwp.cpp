#include "evtol/gwp.hpp"

namespace evtol {

double gwp_energy_cycle(double e_trip_kwh, const EnvironmentConfig& env) {
  return e_trip_kwh * env.grid_gwp_kwh;
}

double gwp_battery_cycle(double replacements_per_year, double fc_a,
                         double e_design_kwh, const EnvironmentConfig& env) {
  if (fc_a <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "gwp_battery_cycle: annual cycles must be > 0");
  }
  return replacements_per_year / fc_a * env.battery_gwp_kwh * e_design_kwh;
}

GwpBreakdown gwp_breakdown(double e_trip_kwh, double e_design_kwh,
                           double replacements_per_year,
                           const Utilization& util, const ScenarioConfig& cfg) {
  GwpBreakdown g;
  g.energy_cycle_kg = gwp_energy_cycle(e_trip_kwh, cfg.env);
  g.battery_cycle_kg = gwp_battery_cycle(replacements_per_year, util.fc_a,
                                         e_design_kwh, cfg.env);
  g.cycle_total_kg = g.energy_cycle_kg + g.battery_cycle_kg;
  if (g.cycle_total_kg > 0) {
    g.energy_share = g.energy_cycle_kg / g.cycle_total_kg;
    g.battery_share = g.battery_cycle_kg / g.cycle_total_kg;
  }
  g.annual_tons = util.fc_a * g.cycle_total_kg / 1000.0;
  const double dist_km = cfg.mission.trip_distance_m / 1000.0;
  if (dist_km > 0) {
    g.per_ask_kg = g.cycle_total_kg / (cfg.ops.seats * dist_km);
  }
  if (cfg.env.gasoline_car_tons_yr > 0) {
    g.gasoline_car_equiv = g.annual_tons / cfg.env.gasoline_car_tons_yr;
  }
  if (cfg.env.electric_car_tons_yr > 0) {
    g.electric_car_equiv = g.annual_tons / cfg.env.electric_car_tons_yr;
  }
  return g;
}

}  // namespace evtol
