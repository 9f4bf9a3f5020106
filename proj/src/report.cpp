#include "evtol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace evtol {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

ordered_json design_json(const DesignVector& d) {
  ordered_json j;
  const auto arr = d.as_array();
  const auto& names = DesignVector::names();
  for (int i = 0; i < DesignVector::kSize; ++i) {
    j[names[i]] = arr[i];
  }
  return j;
}

ordered_json phase_json(const PhaseState& p) {
  ordered_json j;
  j["power_kw"] = p.power_kw;
  j["speed_ms"] = p.speed_ms;
  j["time_s"] = p.time_s;
  j["energy_kwh"] = p.energy_kwh;
  j["thrust_n"] = p.thrust_n;
  j["rpm"] = p.rpm;
  j["tip_speed_ms"] = p.tip_speed_ms;
  j["distance_m"] = p.distance_m;
  return j;
}

ordered_json report_json(const FullReport& r, const LimitsConfig& limits) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario_fingerprint"] = r.fingerprint;
  j["design"] = design_json(r.design);
  j["feasible"] = r.feasible;

  ordered_json mass;
  mass["mtom_kg"] = r.mass.mtom_kg;
  mass["empty_kg"] = r.mass.empty_kg;
  mass["battery_kg"] = r.mass.battery_kg;
  mass["payload_kg"] = r.mass.payload_kg;
  ordered_json comp;
  comp["wing_kg"] = r.mass.wing_kg;
  comp["fuselage_kg"] = r.mass.fuselage_kg;
  comp["gear_kg"] = r.mass.gear_kg;
  comp["rotor_kg"] = r.mass.rotor_kg;
  comp["motor_kg"] = r.mass.motor_kg;
  comp["systems_kg"] = r.mass.systems_kg;
  comp["furnish_kg"] = r.mass.furnish_kg;
  comp["crew_kg"] = r.mass.crew_kg;
  mass["components"] = comp;
  mass["empty_fraction"] = r.mass.empty_fraction;
  mass["battery_fraction"] = r.mass.battery_fraction;
  mass["iterations"] = r.mass.iterations;
  mass["residual_kg"] = r.mass.residual_kg;
  mass["warnings"] = r.mass.warnings;
  j["mass"] = mass;

  ordered_json mission;
  mission["hover"] = phase_json(r.mission.hover);
  mission["climb"] = phase_json(r.mission.climb);
  mission["cruise"] = phase_json(r.mission.cruise);
  mission["reserve_power_kw"] = r.mission.reserve_power_kw;
  mission["reserve_time_s"] = r.mission.reserve_time_s;
  mission["flight_time_s"] = r.mission.flight_time_s;
  mission["cruise_cl"] = r.mission.cruise_cl;
  mission["cruise_cd"] = r.mission.cruise_cd;
  mission["cruise_ld"] = r.mission.cruise_ld;
  mission["climb_cl"] = r.mission.climb_cl;
  ordered_json budget;
  budget["e_trip_kwh"] = r.mission.budget.e_trip_kwh;
  budget["e_reserve_kwh"] = r.mission.budget.e_reserve_kwh;
  budget["e_usable_kwh"] = r.mission.budget.e_usable_kwh;
  budget["e_design_kwh"] = r.mission.budget.e_design_kwh;
  budget["dod"] = r.mission.budget.dod;
  budget["e_usable_wh_kg"] = r.mission.budget.e_usable_wh_kg;
  mission["budget"] = budget;
  j["mission"] = mission;

  ordered_json noise;
  noise["spl_hover_db"] = r.noise.spl_hover_db;
  noise["spl_climb_db"] = r.noise.spl_climb_db;
  noise["spl_cruise_db"] = r.noise.spl_cruise_db;
  noise["tip_speed_hover_ms"] = r.noise.tip_speed_hover_ms;
  noise["tip_speed_climb_ms"] = r.noise.tip_speed_climb_ms;
  noise["tip_speed_cruise_ms"] = r.noise.tip_speed_cruise_ms;
  noise["bpf_hover_hz"] = r.noise.bpf_hover_hz;
  j["noise"] = noise;

  ordered_json battery;
  battery["n_cycles"] = r.battery.n_cycles;
  battery["c_dis_avg"] = r.battery.c_dis_avg;
  battery["dod"] = r.battery.dod;
  battery["t_turnaround_h"] = r.battery.t_turnaround_h;
  battery["dh"] = r.battery.dh;
  battery["replacements_per_year"] = r.battery.replacements_per_year;
  j["battery"] = battery;

  ordered_json util;
  util["t_flight_h"] = r.util.t_flight_h;
  util["t_turnaround_h"] = r.util.t_turnaround_h;
  util["t_leg_h"] = r.util.t_leg_h;
  util["flights_per_day"] = r.util.flights_per_day;
  util["fc_a"] = r.util.fc_a;
  util["flight_hours_year"] = r.util.flight_hours_year;
  j["utilization"] = util;

  ordered_json costs;
  costs["c_energy"] = r.cost.c_energy;
  costs["c_crew"] = r.cost.c_crew;
  costs["c_nav"] = r.cost.c_nav;
  costs["c_maintenance"] = r.cost.c_maintenance;
  costs["c_battery"] = r.cost.c_battery;
  costs["coc"] = r.cost.coc;
  costs["c_insurance"] = r.cost.c_insurance;
  costs["c_depreciation"] = r.cost.c_depreciation;
  costs["coo"] = r.cost.coo;
  costs["doc"] = r.cost.doc;
  costs["ioc"] = r.cost.ioc;
  costs["toc"] = r.cost.toc;
  costs["toc_per_skm"] = r.cost.toc_per_skm;
  j["costs_eur"] = costs;

  ordered_json profit;
  profit["per_flight_eur"] = r.profit_flight;
  profit["per_year_eur"] = r.profit_year;
  j["profit"] = profit;

  ordered_json gwp;
  gwp["energy_cycle_kg"] = r.gwp.energy_cycle_kg;
  gwp["battery_cycle_kg"] = r.gwp.battery_cycle_kg;
  gwp["cycle_total_kg"] = r.gwp.cycle_total_kg;
  gwp["energy_share"] = r.gwp.energy_share;
  gwp["battery_share"] = r.gwp.battery_share;
  gwp["annual_tons"] = r.gwp.annual_tons;
  gwp["per_ask_kg"] = r.gwp.per_ask_kg;
  gwp["gasoline_car_equiv"] = r.gwp.gasoline_car_equiv;
  gwp["electric_car_equiv"] = r.gwp.electric_car_equiv;
  j["gwp"] = gwp;

  ordered_json fom;
  fom["score"] = r.fom_score;
  fom["weights"] = r.fom_table.weights;
  fom["distance_km"] = r.fom_table.distance_km;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.fom_table.rows) {
    ordered_json rj;
    rj["rank"] = row.rank;
    rj["label"] = row.label;
    rj["is_aircraft"] = row.is_aircraft;
    rj["cost_eur"] = row.cost_eur;
    rj["co2_kg"] = row.co2_kg;
    rj["time_h"] = row.time_h;
    rj["r_cost"] = row.r_cost;
    rj["r_co2"] = row.r_co2;
    rj["r_time"] = row.r_time;
    rj["fom"] = row.fom;
    rows.push_back(rj);
  }
  fom["rows"] = rows;
  j["fom"] = fom;

  ordered_json cons;
  const auto vals = r.constraints.values();
  const auto norm = r.constraints.normalized(limits);
  const auto& names = ConstraintReport::names();
  ordered_json slack, normalized;
  for (int i = 0; i < ConstraintReport::kCount; ++i) {
    slack[names[i]] = vals[i];
    normalized[names[i]] = norm[i];
  }
  cons["slack"] = slack;
  cons["normalized"] = normalized;
  cons["worst_normalized"] = r.constraints.worst_normalized(limits);
  j["constraints"] = cons;
  return j;
}

std::string objective_scaled_to_reported(Objective obj, double scaled,
                                         char* buf, std::size_t len) {
  double v = 0.0;
  switch (obj) {
    case Objective::kMaxProfit: v = -scaled * 1e6; break;
    case Objective::kMinToc: v = scaled * 100.0; break;
    case Objective::kMinGwp: v = scaled * 100.0; break;
    case Objective::kMaxFom: v = -scaled; break;
  }
  std::snprintf(buf, len, "%.6g", v);
  return buf;
}

}  // namespace

std::string report_to_json_text(const FullReport& report,
                                const ScenarioConfig& cfg, int indent) {
  return report_json(report, cfg.limits).dump(indent) + "\n";
}

std::string optimization_to_json_text(const OptimizationResult& result,
                                      const ScenarioConfig& cfg, int indent) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario_fingerprint"] = result.best_report.fingerprint;
  j["objective"] = objective_to_string(result.objective);
  j["success"] = result.success;
  j["message"] = result.message;
  j["seed"] = result.seed;
  j["n_starts"] = static_cast<int>(result.starts.size());
  j["total_evaluations"] = result.total_evaluations;
  j["best_start"] = result.best_start;
  j["best_value"] = result.best_value;
  j["best_design"] = design_json(result.best_design);
  j["report"] = report_json(result.best_report, cfg.limits);

  ordered_json starts = ordered_json::array();
  for (const auto& t : result.starts) {
    ordered_json s;
    s["index"] = t.start_index;
    s["initial"] = design_json(t.initial);
    s["final"] = design_json(t.final);
    s["objective_scaled"] = t.objective_scaled;
    s["worst_constraint"] = t.worst_constraint;
    s["feasible"] = t.feasible;
    s["converged"] = t.converged;
    s["iterations"] = t.iterations;
    s["evaluations"] = t.evaluations;
    s["note"] = t.note;
    starts.push_back(s);
  }
  j["starts"] = starts;
  return j.dump(indent) + "\n";
}

std::string report_summary_text(const FullReport& r,
                                const ScenarioConfig& cfg) {
  std::ostringstream os;
  const auto arr = r.design.as_array();
  os << "design: span " << fmt("%.3f", arr[0]) << " m, chord "
     << fmt("%.3f", arr[1]) << " m, R_cruise " << fmt("%.3f", arr[2])
     << " m, R_hover " << fmt("%.3f", arr[3]) << " m, battery "
     << fmt("%.0f", arr[4]) << " Wh/kg, charge " << fmt("%.2f", arr[5])
     << "C\n";

  const auto norm = r.constraints.normalized(cfg.limits);
  const auto& cnames = ConstraintReport::names();
  int worst = 0;
  for (int i = 1; i < ConstraintReport::kCount; ++i) {
    if (norm[i] < norm[worst]) worst = i;
  }
  os << "feasible: " << (r.feasible ? "yes" : "NO") << " (tightest slack "
     << fmt("%+.4f", norm[worst]) << " normalized, " << cnames[worst] << ")\n";

  os << "mass: MTOM " << fmt("%.1f", r.mass.mtom_kg) << " kg = empty "
     << fmt("%.1f", r.mass.empty_kg) << " + battery "
     << fmt("%.1f", r.mass.battery_kg) << " + payload "
     << fmt("%.1f", r.mass.payload_kg) << "  (" << r.mass.iterations
     << " iterations)\n";
  for (const auto& w : r.mass.warnings) {
    os << "  warning: " << w << "\n";
  }

  os << "mission: cruise " << fmt("%.1f", r.mission.cruise.speed_ms)
     << " m/s, flight " << fmt("%.1f", r.mission.flight_time_s / 60.0)
     << " min, E_trip " << fmt("%.2f", r.mission.budget.e_trip_kwh)
     << " kWh, pack " << fmt("%.2f", r.mission.budget.e_design_kwh)
     << " kWh, DoD " << fmt("%.3f", r.mission.budget.dod) << "\n";

  os << "noise: hover " << fmt("%.2f", r.noise.spl_hover_db)
     << " dB SPL (limit " << fmt("%.1f", cfg.limits.spl_hover_limit_db)
     << "), cruise flyover " << fmt("%.2f", r.noise.spl_cruise_db) << " dB\n";

  os << "battery: " << fmt("%.0f", r.battery.n_cycles)
     << " cycles to replacement, turnaround "
     << fmt("%.1f", r.battery.t_turnaround_h * 60.0) << " min, "
     << fmt("%.2f", r.battery.replacements_per_year) << " packs/yr\n";

  os << "economics: TOC " << fmt("%.2f", r.cost.toc) << " EUR/flight ("
     << fmt("%.2f", r.cost.toc_per_skm) << "/seat-km), profit "
     << fmt("%.0f", r.profit_year) << " EUR/yr over "
     << fmt("%.0f", r.util.fc_a) << " flights\n";

  os << "emissions: " << fmt("%.1f", r.gwp.cycle_total_kg)
     << " kg CO2e/flight, " << fmt("%.1f", r.gwp.annual_tons) << " t/yr ("
     << fmt("%.1f", r.gwp.gasoline_car_equiv) << " gasoline cars), "
     << fmt("%.1f", r.gwp.per_ask_kg * 1000.0) << " g/seat-km\n";

  const FomRow* self = r.fom_table.find(kAircraftPoolLabel);
  os << "rating: " << fmt("%.2f", r.fom_score);
  if (self != nullptr) {
    os << " (rank " << self->rank << " of " << r.fom_table.rows.size() << ")";
  }
  os << "\n";
  return os.str();
}

std::string optimization_summary_text(const OptimizationResult& result,
                                      const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "objective: " << objective_to_string(result.objective) << ", seed "
     << result.seed << ", " << result.starts.size() << " starts, "
     << result.total_evaluations << " model evaluations\n";
  char buf[64];
  for (const auto& t : result.starts) {
    os << "  start " << t.start_index << ": ";
    if (!t.note.empty()) {
      os << t.note << "\n";
      continue;
    }
    os << (t.feasible ? "feasible" : "infeasible") << ", "
       << (t.converged ? "converged" : "stopped") << " after " << t.iterations
       << " iterations, objective "
       << objective_scaled_to_reported(result.objective, t.objective_scaled,
                                       buf, sizeof(buf))
       << "\n";
  }
  os << result.message << "\n";
  if (result.success) {
    os << "\n" << report_summary_text(result.best_report, cfg);
  }
  return os.str();
}

std::string fom_table_csv(const FomTable& table) {
  std::ostringstream os;
  os << "rank,label,cost_eur,co2_kg,time_h,r_cost,r_co2,r_time,fom\n";
  for (const auto& row : table.rows) {
    os << row.rank << ",\"" << row.label << "\"," << fmt("%.6g", row.cost_eur)
       << "," << fmt("%.6g", row.co2_kg) << "," << fmt("%.6g", row.time_h)
       << "," << fmt("%.4f", row.r_cost) << "," << fmt("%.4f", row.r_co2)
       << "," << fmt("%.4f", row.r_time) << "," << fmt("%.4f", row.fom)
       << "\n";
  }
  return os.str();
}

std::string sweep_csv(const std::vector<SweepPoint>& points,
                      const std::string& var_name) {
  std::ostringstream os;
  os << var_name
     << ",ok,feasible,mtom_kg,e_trip_kwh,toc_eur,profit_year_eur,"
        "gwp_annual_tons,spl_hover_db,fom,diagnostic\n";
  for (const auto& p : points) {
    os << fmt("%.10g", p.value) << ",";
    if (p.eval.report) {
      const FullReport& r = *p.eval.report;
      os << "1," << (r.feasible ? 1 : 0) << "," << fmt("%.6f", r.mass.mtom_kg)
         << "," << fmt("%.6f", r.mission.budget.e_trip_kwh) << ","
         << fmt("%.6f", r.cost.toc) << "," << fmt("%.2f", r.profit_year) << ","
         << fmt("%.6f", r.gwp.annual_tons) << ","
         << fmt("%.6f", r.noise.spl_hover_db) << ","
         << fmt("%.6f", r.fom_score) << ",\n";
    } else {
      os << "0,0,,,,,,,,\"" << p.eval.diagnostic << "\"\n";
    }
  }
  return os.str();
}

std::string optimizer_trace_csv(const OptimizationResult& result) {
  std::ostringstream os;
  os << "start,iteration,objective_scaled,worst_constraint,step_norm,merit\n";
  for (const auto& t : result.starts) {
    for (const auto& rec : t.history) {
      os << t.start_index << "," << rec.iteration << ","
         << fmt("%.10g", rec.objective_scaled) << ","
         << fmt("%.10g", rec.worst_constraint) << ","
         << fmt("%.4g", rec.step_norm) << "," << fmt("%.10g", rec.merit)
         << "\n";
    }
  }
  return os.str();
}

std::vector<BenchmarkRow> benchmark_rows(const FullReport& r,
                                         const ScenarioConfig& cfg) {
  const BenchmarkConfig& b = cfg.benchmark;
  const double trip_km = cfg.mission.trip_distance_m / 1000.0;
  const double seats = static_cast<double>(cfg.ops.seats);
  const double flight_min = r.mission.flight_time_s / 60.0;
  const double doc = r.cost.doc;

  std::vector<BenchmarkRow> rows;
  rows.push_back({"mtom", "kg", r.mass.mtom_kg, b.mtom_kg});
  rows.push_back({"battery_specific_energy", "Wh/kg",
                  r.design.rho_battery_wh_kg, b.rho_battery_wh_kg});
  rows.push_back({"battery_cycle_life", "cycles", r.battery.n_cycles,
                  b.cycle_life});
  rows.push_back({"battery_capacity", "kWh", r.mission.budget.e_design_kwh,
                  b.capacity_kwh});
  rows.push_back({"cruise_speed", "km/h", r.mission.cruise.speed_ms * 3.6,
                  b.cruise_speed_kmh});
  rows.push_back({"motion_efficiency", "km/kWh",
                  trip_km / r.mission.budget.e_trip_kwh,
                  b.motion_efficiency_km_kwh});
  rows.push_back({"hover_power", "kW", r.mission.hover.power_kw,
                  b.hover_power_kw});
  rows.push_back({"cruise_power", "kW", r.mission.cruise.power_kw,
                  b.cruise_power_kw});
  rows.push_back({"lift_to_drag", "-", r.mission.cruise_ld, b.lift_to_drag});
  rows.push_back({"cost_per_pax_km", "EUR", r.cost.toc / (seats * trip_km),
                  b.cost_per_pax_km});
  rows.push_back({"cost_per_pax_min", "EUR", r.cost.toc / (seats * flight_min),
                  b.cost_per_pax_min});
  rows.push_back({"pooled_trip_cost", "EUR",
                  r.cost.toc / (seats * cfg.ops.load_factor),
                  b.pooled_trip_cost});
  rows.push_back({"annual_flight_hours", "h", r.util.flight_hours_year,
                  b.annual_flight_hours});
  rows.push_back({"load_factor", "-", cfg.ops.load_factor, b.load_factor});
  rows.push_back({"doc_share_pilot", "%", 100.0 * r.cost.c_crew / doc,
                  100.0 * b.share_pilot});
  rows.push_back({"doc_share_maintenance", "%",
                  100.0 * r.cost.c_maintenance / doc,
                  100.0 * b.share_maintenance});
  rows.push_back({"doc_share_battery", "%", 100.0 * r.cost.c_battery / doc,
                  100.0 * b.share_battery});
  rows.push_back({"doc_share_energy", "%", 100.0 * r.cost.c_energy / doc,
                  100.0 * b.share_energy});
  rows.push_back({"doc_share_ownership", "%", 100.0 * r.cost.coo / doc,
                  100.0 * b.share_ownership});
  return rows;
}

std::string benchmark_csv(const FullReport& report,
                          const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "metric,unit,model," << cfg.benchmark.label << "\n";
  for (const auto& row : benchmark_rows(report, cfg)) {
    os << row.metric << "," << row.unit << "," << fmt("%.6g", row.model) << ","
       << fmt("%.6g", row.requirement) << "\n";
  }
  return os.str();
}

std::string benchmark_text(const FullReport& report,
                           const ScenarioConfig& cfg) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof(line), "%-26s %8s %12s %12s\n", "metric", "unit",
                "model", cfg.benchmark.label.c_str());
  os << line;
  for (const auto& row : benchmark_rows(report, cfg)) {
    std::snprintf(line, sizeof(line), "%-26s %8s %12.4g %12.4g\n",
                  row.metric.c_str(), row.unit.c_str(), row.model,
                  row.requirement);
    os << line;
  }
  return os.str();
}

}  // namespace evtol
