#include "evtol/battery.hpp"

#include <cmath>

namespace evtol {

double turnaround_time_h(double dod, double c_charge) {
  if (c_charge <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "turnaround_time: charge rate must be > 0");
  }
  return dod / c_charge;
}

double cycle_life(double dod, double c_charge, double c_dis_avg,
                  const BatteryConfig& cfg) {
  if (dod <= 0 || c_charge <= 0 || c_dis_avg <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "cycle_life: stressors must be > 0");
  }
  return cfg.cycle_ref * std::pow(cfg.dod_ref / dod, cfg.k_dod) *
         std::pow(cfg.c_ref / c_charge, cfg.k_charge) *
         std::pow(cfg.c_ref / c_dis_avg, cfg.k_discharge);
}

double avg_discharge_rate(double e_trip_kwh, double e_design_kwh,
                          double flight_time_h) {
  if (e_design_kwh <= 0 || flight_time_h <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "avg_discharge_rate: capacity and time must be > 0");
  }
  return e_trip_kwh / (e_design_kwh * flight_time_h);
}

double annual_batteries(double n_cycles, double flight_time_h, double dh,
                        const OperationsConfig& ops) {
  if (n_cycles <= 0 || flight_time_h <= 0 || dh <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "annual_batteries: inputs must be > 0");
  }
  return ops.working_days * ops.daily_window_h /
         (n_cycles * flight_time_h * dh);
}

BatteryOps battery_ops(const EnergyBudget& budget, double c_charge,
                       double flight_time_s, const ScenarioConfig& cfg) {
  BatteryOps ops;
  ops.dod = budget.dod;
  const double t_flight_h = flight_time_s / 3600.0;
  ops.c_dis_avg =
      avg_discharge_rate(budget.e_trip_kwh, budget.e_design_kwh, t_flight_h);
  ops.t_turnaround_h = turnaround_time_h(ops.dod, c_charge);
  ops.dh = ops.t_turnaround_h / t_flight_h + 1.0;
  ops.n_cycles = cycle_life(ops.dod, c_charge, ops.c_dis_avg, cfg.battery);
  ops.replacements_per_year =
      annual_batteries(ops.n_cycles, t_flight_h, ops.dh, cfg.ops);
  return ops;
}

}  // namespace evtol
