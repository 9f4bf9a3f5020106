#include "evtol/economics.hpp"

#include <cmath>

namespace evtol {

Utilization utilization(double flight_time_s, double turnaround_h,
                        const OperationsConfig& ops) {
  if (flight_time_s <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "utilization: flight time must be > 0");
  }
  Utilization u;
  u.t_flight_h = flight_time_s / 3600.0;
  u.t_turnaround_h = turnaround_h;
  u.t_leg_h = u.t_flight_h + u.t_turnaround_h;
  u.flights_per_day = ops.daily_window_h / u.t_leg_h;
  u.fc_a = ops.working_days * ops.daily_window_h / u.t_leg_h;
  u.flight_hours_year = u.fc_a * u.t_flight_h;
  return u;
}

double annuity_factor(double rate, double years) {
  if (years <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "annuity_factor: horizon must be > 0");
  }
  if (rate == 0.0) {
    return 1.0 / years;
  }
  return rate / (1.0 - std::pow(1.0 + rate, -years));
}

CostBreakdown cost_breakdown(double e_trip_kwh, double e_design_kwh,
                             double mtom_kg, double replacements_per_year,
                             const Utilization& util,
                             const ScenarioConfig& cfg) {
  if (util.fc_a <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "cost_breakdown: annual cycles must be > 0");
  }
  const EconomicsConfig& ec = cfg.econ;
  const double dist_km = cfg.mission.trip_distance_m / 1000.0;

  CostBreakdown c;
  c.c_energy = e_trip_kwh * ec.electricity_price_kwh;
  c.c_crew = cfg.ops.pilot_count * ec.annual_crew_cost / util.fc_a;
  // Route-charge form: unit rate x distance factor x sqrt(mass factor).
  c.c_nav = ec.nav_unit_rate * (dist_km / 100.0) *
            std::sqrt(mtom_kg / 1000.0 / 50.0);
  c.c_maintenance = ec.maintenance_wrap_rate_fh * util.t_flight_h;
  c.c_battery = replacements_per_year * ec.battery_pack_price_kwh *
                e_design_kwh / util.fc_a;
  c.coc = c.c_energy + c.c_crew + c.c_nav + c.c_maintenance + c.c_battery;

  c.c_insurance = ec.insurance_fraction * c.coc;
  c.c_depreciation = ec.acquisition_price_per_kg * mtom_kg *
                     annuity_factor(ec.interest_rate, ec.depreciation_years) /
                     util.fc_a;
  c.coo = c.c_insurance + c.c_depreciation;

  c.doc = c.coc + c.coo;
  c.ioc = ec.ioc_fraction * c.doc;
  c.toc = c.doc + c.ioc;
  c.toc_per_skm = c.toc / (cfg.ops.seats * dist_km);
  return c;
}

double profit_per_flight(const CostBreakdown& cost, const ScenarioConfig& cfg) {
  const double dist_km = cfg.mission.trip_distance_m / 1000.0;
  return cfg.econ.fare_per_km * dist_km - cost.toc;
}

double profit_annual(const CostBreakdown& cost, const Utilization& util,
                     const ScenarioConfig& cfg) {
  return util.fc_a * profit_per_flight(cost, cfg);
}

}  // namespace evtol
