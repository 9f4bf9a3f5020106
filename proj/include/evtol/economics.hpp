#pragma once

#include "evtol/scenario.hpp"

namespace evtol {

struct Utilization {
  double t_flight_h = 0.0;
  double t_turnaround_h = 0.0;
  double t_leg_h = 0.0;          // flight + turnaround
  double flights_per_day = 0.0;
  double fc_a = 0.0;             // flight cycles per year
  double flight_hours_year = 0.0;
};

// All per-flight EUR amounts. The hierarchy: COC (cash) + COO (ownership)
// = DOC, plus indirect costs as a fixed fraction of DOC, gives TOC.
struct CostBreakdown {
  double c_energy = 0.0;
  double c_crew = 0.0;
  double c_nav = 0.0;
  double c_maintenance = 0.0;
  double c_battery = 0.0;
  double coc = 0.0;
  double c_insurance = 0.0;
  double c_depreciation = 0.0;
  double coo = 0.0;
  double doc = 0.0;
  double ioc = 0.0;
  double toc = 0.0;
  double toc_per_skm = 0.0;
};

Utilization utilization(double flight_time_s, double turnaround_h,
                        const OperationsConfig& ops);

// Constant-payment annuity factor: annual share of a unit principal repaid
// over the horizon at the given rate.
double annuity_factor(double rate, double years);

CostBreakdown cost_breakdown(double e_trip_kwh, double e_design_kwh,
                             double mtom_kg, double replacements_per_year,
                             const Utilization& util,
                             const ScenarioConfig& cfg);

double profit_per_flight(const CostBreakdown& cost, const ScenarioConfig& cfg);
double profit_annual(const CostBreakdown& cost, const Utilization& util,
                     const ScenarioConfig& cfg);

}  // namespace evtol
