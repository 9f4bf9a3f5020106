#pragma once

#include "evtol/mission.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

struct BatteryOps {
  double n_cycles = 0.0;
  double c_dis_avg = 0.0;        // trip-average discharge rate, 1/h
  double dod = 0.0;
  double t_turnaround_h = 0.0;   // recharge exactly the energy consumed
  double dh = 0.0;               // time-efficiency ratio t_turn/t_flight + 1
  double replacements_per_year = 0.0;
};

double turnaround_time_h(double dod, double c_charge);

// Power-law cycle-life surrogate, strictly decreasing in all three stressors.
double cycle_life(double dod, double c_charge, double c_dis_avg,
                  const BatteryConfig& cfg);

// Trip-average discharge C-rate: energy drawn over rated capacity and time.
double avg_discharge_rate(double e_trip_kwh, double e_design_kwh,
                          double flight_time_h);

// Packs consumed per year: annual operating time over cycle life times the
// per-cycle occupation (flight + recharge).
double annual_batteries(double n_cycles, double flight_time_h, double dh,
                        const OperationsConfig& ops);

BatteryOps battery_ops(const EnergyBudget& budget, double c_charge,
                       double flight_time_s, const ScenarioConfig& cfg);

}  // namespace evtol
