#include "evtol/fom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace evtol {

std::string TransportMode::label() const {
  char buf[16];
  const double pct = load_factor * 100.0;
  if (std::abs(pct - std::round(pct)) < 1e-9) {
    std::snprintf(buf, sizeof(buf), " (%.0f%%)", pct);
  } else {
    std::snprintf(buf, sizeof(buf), " (%.1f%%)", pct);
  }
  return name + buf;
}

const std::vector<TransportMode>& baseline_modes() {
  // Per-seat metrics for conventional modes at several occupancy levels.
  // The airplane speed already folds in the fixed two-hour ground overhead.
  static const std::vector<TransportMode> kModes = {
      {"gasoline_car", 1.00, 85.0, 0.023, 0.031, 1.3},
      {"gasoline_car", 0.26, 85.0, 0.090, 0.120, 1.3},
      {"gasoline_car", 0.20, 85.0, 0.117, 0.157, 1.3},
      {"diesel_car", 1.00, 85.0, 0.017, 0.026, 1.3},
      {"diesel_car", 0.26, 85.0, 0.064, 0.099, 1.3},
      {"diesel_car", 0.20, 85.0, 0.083, 0.128, 1.3},
      {"electric_car", 1.00, 85.0, 0.021, 0.013, 1.3},
      {"electric_car", 0.26, 85.0, 0.081, 0.050, 1.3},
      {"electric_car", 0.20, 85.0, 0.105, 0.065, 1.3},
      {"public_bus", 1.00, 64.0, 0.060, 0.013, 1.6},
      {"public_bus", 0.60, 64.0, 0.104, 0.022, 1.6},
      {"public_train", 1.00, 99.0, 0.200, 0.007, 1.2},
      {"public_train", 0.50, 99.0, 0.402, 0.012, 1.2},
      {"airplane", 1.00, 74.0, 0.460, 0.198, 1.05},
      {"airplane", 0.796, 74.0, 0.579, 0.249, 1.05},
      {"bicycle", 1.00, 18.8, -0.491, 0.0, 1.28},
  };
  return kModes;
}

std::vector<TransportMode> load_modes_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open modes CSV: " + path);
  }
  std::vector<TransportMode> modes;
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // first data-ish line is the header
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw ScenarioError("modes CSV line " + std::to_string(line_no) +
                          ": expected 6 columns, got " +
                          std::to_string(fields.size()));
    }
    TransportMode m;
    m.name = fields[0];
    try {
      m.load_factor = std::stod(fields[1]);
      m.speed_kmh = std::stod(fields[2]);
      m.cost_per_skm = std::stod(fields[3]);
      m.co2_per_skm = std::stod(fields[4]);
      m.circuity = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw ScenarioError("modes CSV line " + std::to_string(line_no) +
                          ": non-numeric field");
    }
    if (m.speed_kmh <= 0 || m.circuity < 1.0) {
      throw ScenarioError("modes CSV line " + std::to_string(line_no) +
                          ": speed must be > 0 and circuity >= 1");
    }
    modes.push_back(std::move(m));
  }
  if (modes.empty()) {
    throw ScenarioError("modes CSV has no data rows: " + path);
  }
  return modes;
}

TripValues mode_trip_values(const TransportMode& mode, double distance_km) {
  if (distance_km <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "mode_trip_values: distance must be > 0");
  }
  const double actual_km = distance_km * mode.circuity;
  return {actual_km * mode.cost_per_skm, actual_km * mode.co2_per_skm,
          actual_km / mode.speed_kmh};
}

std::vector<double> rate_values(const std::vector<double>& values) {
  std::vector<double> ratings(values.size(), 10.0);
  if (values.empty()) return ratings;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) {
    return ratings;  // degenerate pool: everything is the best value
  }
  for (size_t i = 0; i < values.size(); ++i) {
    const double x = values[i];
    ratings[i] = ((x - lo) - 10.0 * (x - hi)) / (hi - lo);
  }
  return ratings;
}

FomTable build_fom_table(const std::vector<TransportMode>& modes,
                         double distance_km,
                         const std::array<double, 3>& weights,
                         const std::vector<PoolEntry>& aircraft) {
  FomTable table;
  table.weights = weights;
  table.distance_km = distance_km;

  for (const TransportMode& m : modes) {
    const TripValues v = mode_trip_values(m, distance_km);
    FomRow row;
    row.label = m.label();
    row.cost_eur = v.cost_eur;
    row.co2_kg = v.co2_kg;
    row.time_h = v.time_h;
    table.rows.push_back(std::move(row));
  }
  for (const PoolEntry& e : aircraft) {
    FomRow row;
    row.label = e.label;
    row.is_aircraft = true;
    row.cost_eur = e.cost_eur;
    row.co2_kg = e.co2_kg;
    row.time_h = e.time_h;
    table.rows.push_back(std::move(row));
  }

  std::vector<double> cost, co2, time;
  for (const FomRow& r : table.rows) {
    cost.push_back(r.cost_eur);
    co2.push_back(r.co2_kg);
    time.push_back(r.time_h);
  }
  const auto r_cost = rate_values(cost);
  const auto r_co2 = rate_values(co2);
  const auto r_time = rate_values(time);
  for (size_t i = 0; i < table.rows.size(); ++i) {
    FomRow& r = table.rows[i];
    r.r_cost = r_cost[i];
    r.r_co2 = r_co2[i];
    r.r_time = r_time[i];
    r.fom = weights[0] * r.r_cost + weights[1] * r.r_co2 + weights[2] * r.r_time;
  }

  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const FomRow& a, const FomRow& b) { return a.fom > b.fom; });
  for (size_t i = 0; i < table.rows.size(); ++i) {
    table.rows[i].rank = static_cast<int>(i) + 1;
  }
  return table;
}

const FomRow* FomTable::find(const std::string& label) const {
  for (const FomRow& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

}  // namespace evtol
