#pragma once

#include <array>
#include <string>
#include <vector>

#include "evtol/scenario.hpp"

namespace evtol {

// One row of the cross-transport comparison dataset. Costs are per
// seat-kilometer and may be negative (the bicycle carries a health credit);
// circuity is route length over straight-line distance.
struct TransportMode {
  std::string name;
  double load_factor = 1.0;
  double speed_kmh = 0.0;
  double cost_per_skm = 0.0;
  double co2_per_skm = 0.0;
  double circuity = 1.0;

  std::string label() const;  // "electric_car (26%)"
};

// Built-in comparison pool; also available as data/transport_modes.csv for
// editing and as the reference for the CSV schema.
const std::vector<TransportMode>& baseline_modes();

// CSV columns: name,load_factor,speed_kmh,cost_per_skm,co2_per_skm,circuity.
// A header row is required; '#' lines are comments.
std::vector<TransportMode> load_modes_csv(const std::string& path);

struct TripValues {
  double cost_eur = 0.0;
  double co2_kg = 0.0;
  double time_h = 0.0;
};

// Apply circuity and per-skm metrics to a straight-line trip distance.
TripValues mode_trip_values(const TransportMode& mode, double distance_km);

// Min-max rating: pool minimum maps to 10, maximum to 1, linear in between.
// A degenerate pool (all values equal) rates everything 10.
std::vector<double> rate_values(const std::vector<double>& values);

struct FomRow {
  std::string label;
  bool is_aircraft = false;
  double cost_eur = 0.0;
  double co2_kg = 0.0;
  double time_h = 0.0;
  double r_cost = 0.0;
  double r_co2 = 0.0;
  double r_time = 0.0;
  double fom = 0.0;
  int rank = 0;  // 1 = best aggregate score
};

struct FomTable {
  std::array<double, 3> weights{};  // cost, co2, time
  double distance_km = 0.0;
  std::vector<FomRow> rows;         // sorted by rank

  const FomRow* find(const std::string& label) const;
};

// Extra pool entries evaluated elsewhere (the aircraft under study).
struct PoolEntry {
  std::string label;
  double cost_eur = 0.0;
  double co2_kg = 0.0;
  double time_h = 0.0;
};

FomTable build_fom_table(const std::vector<TransportMode>& modes,
                         double distance_km,
                         const std::array<double, 3>& weights,
                         const std::vector<PoolEntry>& aircraft = {});

}  // namespace evtol
