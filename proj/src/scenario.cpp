#include "evtol/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace evtol {

using nlohmann::json;

const std::array<const char*, DesignVector::kSize>& DesignVector::names() {
  static const std::array<const char*, kSize> kNames = {
      "span_m",      "chord_m",           "r_cruise_m",
      "r_hover_m",   "rho_battery_wh_kg", "c_charge_per_h"};
  return kNames;
}

std::array<VarBounds, DesignVector::kSize> bounds_array(const DesignBounds& b) {
  return {b.span_m,    b.chord_m,           b.r_cruise_m,
          b.r_hover_m, b.rho_battery_wh_kg, b.c_charge_per_h};
}

const char* first_bounds_violation(const DesignVector& d,
                                   const DesignBounds& b) {
  const auto x = d.as_array();
  const auto bounds = bounds_array(b);
  for (int i = 0; i < DesignVector::kSize; ++i) {
    if (!(x[i] >= bounds[i].lo && x[i] <= bounds[i].hi)) {
      return DesignVector::names()[i];
    }
  }
  return nullptr;
}

std::array<double, DesignVector::kSize> normalize_design(
    const DesignVector& d, const DesignBounds& b) {
  const auto x = d.as_array();
  const auto bounds = bounds_array(b);
  std::array<double, DesignVector::kSize> z{};
  for (int i = 0; i < DesignVector::kSize; ++i) {
    z[i] = (x[i] - bounds[i].lo) / (bounds[i].hi - bounds[i].lo);
  }
  return z;
}

DesignVector denormalize_design(const std::array<double, DesignVector::kSize>& z,
                                const DesignBounds& b) {
  const auto bounds = bounds_array(b);
  std::array<double, DesignVector::kSize> x{};
  for (int i = 0; i < DesignVector::kSize; ++i) {
    x[i] = bounds[i].lo + z[i] * (bounds[i].hi - bounds[i].lo);
  }
  return DesignVector::from_array(x);
}

// ---------------------------------------------------------------------------
// JSON mapping. Serialization writes every field; loading starts from the
// defaults, rejects unknown keys (typo protection), merges, then re-reads.

namespace {

json to_json(const VarBounds& b) { return json::array({b.lo, b.hi}); }

void read_bounds(const json& j, VarBounds& b, const char* name) {
  if (!j.is_array() || j.size() != 2) {
    throw ScenarioError(std::string("bounds.") + name +
                        ": expected [lo, hi] array");
  }
  b.lo = j[0].get<double>();
  b.hi = j[1].get<double>();
}

json scenario_json(const ScenarioConfig& c) {
  json j;
  j["mission"] = {
      {"trip_distance_m", c.mission.trip_distance_m},
      {"cruise_altitude_m", c.mission.cruise_altitude_m},
      {"hover_time_s", c.mission.hover_time_s},
      {"reserve_time_min", c.mission.reserve_time_min},
      {"climb_angle_deg", c.mission.climb_angle_deg},
      {"air_density_sl", c.mission.air_density_sl},
      {"air_density_cruise", c.mission.air_density_cruise},
  };
  j["operations"] = {
      {"working_days", c.ops.working_days},
      {"daily_window_h", c.ops.daily_window_h},
      {"load_factor", c.ops.load_factor},
      {"seats", c.ops.seats},
      {"pilot_count", c.ops.pilot_count},
  };
  j["economics"] = {
      {"electricity_price_kwh", c.econ.electricity_price_kwh},
      {"fare_per_km", c.econ.fare_per_km},
      {"battery_pack_price_kwh", c.econ.battery_pack_price_kwh},
      {"ioc_fraction", c.econ.ioc_fraction},
      {"insurance_fraction", c.econ.insurance_fraction},
      {"annual_crew_cost", c.econ.annual_crew_cost},
      {"maintenance_wrap_rate_fh", c.econ.maintenance_wrap_rate_fh},
      {"nav_unit_rate", c.econ.nav_unit_rate},
      {"acquisition_price_per_kg", c.econ.acquisition_price_per_kg},
      {"interest_rate", c.econ.interest_rate},
      {"depreciation_years", c.econ.depreciation_years},
  };
  j["environment"] = {
      {"grid_gwp_kwh", c.env.grid_gwp_kwh},
      {"battery_gwp_kwh", c.env.battery_gwp_kwh},
      {"gasoline_car_tons_yr", c.env.gasoline_car_tons_yr},
      {"electric_car_tons_yr", c.env.electric_car_tons_yr},
  };
  j["limits"] = {
      {"mtom_limit_kg", c.limits.mtom_limit_kg},
      {"spl_hover_limit_db", c.limits.spl_hover_limit_db},
      {"rpm_limit", c.limits.rpm_limit},
      {"speed_limit_ms", c.limits.speed_limit_ms},
      {"vertiport_width_m", c.limits.vertiport_width_m},
      {"rotor_clearance_m", c.limits.rotor_clearance_m},
      {"fuselage_radius_m", c.limits.fuselage_radius_m},
  };
  j["bounds"] = {
      {"span_m", to_json(c.bounds.span_m)},
      {"chord_m", to_json(c.bounds.chord_m)},
      {"r_cruise_m", to_json(c.bounds.r_cruise_m)},
      {"r_hover_m", to_json(c.bounds.r_hover_m)},
      {"rho_battery_wh_kg", to_json(c.bounds.rho_battery_wh_kg)},
      {"c_charge_per_h", to_json(c.bounds.c_charge_per_h)},
  };
  j["aero"] = {
      {"airfoil_lift_slope", c.aero.airfoil_lift_slope},
      {"cl_at_zero_alpha", c.aero.cl_at_zero_alpha},
      {"oswald_e", c.aero.oswald_e},
      {"cd_min", c.aero.cd_min},
      {"alpha_cruise_deg", c.aero.alpha_cruise_deg},
      {"alpha_max_deg", c.aero.alpha_max_deg},
  };
  j["propulsion"] = {
      {"gravity", c.prop.gravity},
      {"lift_rotor_count", c.prop.lift_rotor_count},
      {"eta_hover", c.prop.eta_hover},
      {"eta_climb", c.prop.eta_climb},
      {"eta_cruise", c.prop.eta_cruise},
      {"thrust_coefficient", c.prop.thrust_coefficient},
      {"motor_sizing_margin", c.prop.motor_sizing_margin},
  };
  j["mass"] = {
      {"pax_mass_kg", c.mass.pax_mass_kg},
      {"luggage_mass_kg", c.mass.luggage_mass_kg},
      {"sizing_load_factor", c.mass.sizing_load_factor},
      {"crew_mass_kg", c.mass.crew_mass_kg},
      {"ultimate_load_factor", c.mass.ultimate_load_factor},
      {"wing_coeff", c.mass.wing_coeff},
      {"wing_area_exp", c.mass.wing_area_exp},
      {"wing_ar_exp", c.mass.wing_ar_exp},
      {"wing_load_exp", c.mass.wing_load_exp},
      {"fuselage_coeff", c.mass.fuselage_coeff},
      {"fuselage_exp", c.mass.fuselage_exp},
      {"gear_fraction", c.mass.gear_fraction},
      {"rotor_coeff", c.mass.rotor_coeff},
      {"rotor_exp", c.mass.rotor_exp},
      {"motor_specific_power", c.mass.motor_specific_power},
      {"systems_coeff", c.mass.systems_coeff},
      {"systems_exp", c.mass.systems_exp},
      {"furnish_slope", c.mass.furnish_slope},
      {"furnish_offset", c.mass.furnish_offset},
      {"fixed_point_tol_kg", c.mass.fixed_point_tol_kg},
      {"fixed_point_max_iter", c.mass.fixed_point_max_iter},
      {"mtom_guess_kg", c.mass.mtom_guess_kg},
      {"regression_valid_lo_kg", c.mass.regression_valid_lo_kg},
      {"regression_valid_hi_kg", c.mass.regression_valid_hi_kg},
  };
  j["battery"] = {
      {"usable_fraction", c.battery.usable_fraction},
      {"cycle_ref", c.battery.cycle_ref},
      {"dod_ref", c.battery.dod_ref},
      {"c_ref", c.battery.c_ref},
      {"k_dod", c.battery.k_dod},
      {"k_charge", c.battery.k_charge},
      {"k_discharge", c.battery.k_discharge},
  };
  j["acoustics"] = {
      {"blade_count", c.acoustics.blade_count},
      {"solidity", c.acoustics.solidity},
      {"effective_radius_frac", c.acoustics.effective_radius_frac},
      {"speed_of_sound", c.acoustics.speed_of_sound},
      {"observer_distance_hover_m", c.acoustics.observer_distance_hover_m},
      {"observer_distance_climb_m", c.acoustics.observer_distance_climb_m},
      {"observer_distance_cruise_m", c.acoustics.observer_distance_cruise_m},
      {"observer_elevation_deg", c.acoustics.observer_elevation_deg},
      {"broadband_const_db", c.acoustics.broadband_const_db},
      {"broadband_cl_ref", c.acoustics.broadband_cl_ref},
      {"apply_a_weighting", c.acoustics.apply_a_weighting},
      {"p_ref", c.acoustics.p_ref},
  };
  j["fom"] = {
      {"weights", c.fom.weights},
      {"pax_basis", c.fom.pax_basis},
  };
  j["benchmark"] = {
      {"label", c.benchmark.label},
      {"mtom_kg", c.benchmark.mtom_kg},
      {"rho_battery_wh_kg", c.benchmark.rho_battery_wh_kg},
      {"cycle_life", c.benchmark.cycle_life},
      {"capacity_kwh", c.benchmark.capacity_kwh},
      {"cruise_speed_kmh", c.benchmark.cruise_speed_kmh},
      {"motion_efficiency_km_kwh", c.benchmark.motion_efficiency_km_kwh},
      {"hover_power_kw", c.benchmark.hover_power_kw},
      {"cruise_power_kw", c.benchmark.cruise_power_kw},
      {"lift_to_drag", c.benchmark.lift_to_drag},
      {"cost_per_pax_km", c.benchmark.cost_per_pax_km},
      {"cost_per_pax_min", c.benchmark.cost_per_pax_min},
      {"pooled_trip_cost", c.benchmark.pooled_trip_cost},
      {"annual_flight_hours", c.benchmark.annual_flight_hours},
      {"load_factor", c.benchmark.load_factor},
      {"share_pilot", c.benchmark.share_pilot},
      {"share_maintenance", c.benchmark.share_maintenance},
      {"share_battery", c.benchmark.share_battery},
      {"share_energy", c.benchmark.share_energy},
      {"share_ownership", c.benchmark.share_ownership},
  };
  return j;
}

// Reject keys that do not exist in the default layout so config typos fail
// loudly instead of silently keeping a default.
void check_known_keys(const json& user, const json& skeleton,
                      const std::string& prefix) {
  if (!user.is_object()) {
    throw ScenarioError("scenario" +
                        (prefix.empty() ? std::string()
                                        : " section '" + prefix + "'") +
                        ": expected an object");
  }
  for (auto it = user.begin(); it != user.end(); ++it) {
    if (!skeleton.contains(it.key())) {
      throw ScenarioError("unknown scenario field '" +
                          (prefix.empty() ? it.key() : prefix + "." + it.key()) +
                          "'");
    }
    const json& ref = skeleton.at(it.key());
    if (ref.is_object()) {
      check_known_keys(it.value(), ref, prefix.empty()
                                            ? it.key()
                                            : prefix + "." + it.key());
    }
  }
}

ScenarioConfig scenario_from_merged(const json& j) {
  ScenarioConfig c;
  const json& m = j.at("mission");
  c.mission.trip_distance_m = m.at("trip_distance_m");
  c.mission.cruise_altitude_m = m.at("cruise_altitude_m");
  c.mission.hover_time_s = m.at("hover_time_s");
  c.mission.reserve_time_min = m.at("reserve_time_min");
  c.mission.climb_angle_deg = m.at("climb_angle_deg");
  c.mission.air_density_sl = m.at("air_density_sl");
  c.mission.air_density_cruise = m.at("air_density_cruise");

  const json& o = j.at("operations");
  c.ops.working_days = o.at("working_days");
  c.ops.daily_window_h = o.at("daily_window_h");
  c.ops.load_factor = o.at("load_factor");
  c.ops.seats = o.at("seats");
  c.ops.pilot_count = o.at("pilot_count");

  const json& e = j.at("economics");
  c.econ.electricity_price_kwh = e.at("electricity_price_kwh");
  c.econ.fare_per_km = e.at("fare_per_km");
  c.econ.battery_pack_price_kwh = e.at("battery_pack_price_kwh");
  c.econ.ioc_fraction = e.at("ioc_fraction");
  c.econ.insurance_fraction = e.at("insurance_fraction");
  c.econ.annual_crew_cost = e.at("annual_crew_cost");
  c.econ.maintenance_wrap_rate_fh = e.at("maintenance_wrap_rate_fh");
  c.econ.nav_unit_rate = e.at("nav_unit_rate");
  c.econ.acquisition_price_per_kg = e.at("acquisition_price_per_kg");
  c.econ.interest_rate = e.at("interest_rate");
  c.econ.depreciation_years = e.at("depreciation_years");

  const json& en = j.at("environment");
  c.env.grid_gwp_kwh = en.at("grid_gwp_kwh");
  c.env.battery_gwp_kwh = en.at("battery_gwp_kwh");
  c.env.gasoline_car_tons_yr = en.at("gasoline_car_tons_yr");
  c.env.electric_car_tons_yr = en.at("electric_car_tons_yr");

  const json& l = j.at("limits");
  c.limits.mtom_limit_kg = l.at("mtom_limit_kg");
  c.limits.spl_hover_limit_db = l.at("spl_hover_limit_db");
  c.limits.rpm_limit = l.at("rpm_limit");
  c.limits.speed_limit_ms = l.at("speed_limit_ms");
  c.limits.vertiport_width_m = l.at("vertiport_width_m");
  c.limits.rotor_clearance_m = l.at("rotor_clearance_m");
  c.limits.fuselage_radius_m = l.at("fuselage_radius_m");

  const json& b = j.at("bounds");
  read_bounds(b.at("span_m"), c.bounds.span_m, "span_m");
  read_bounds(b.at("chord_m"), c.bounds.chord_m, "chord_m");
  read_bounds(b.at("r_cruise_m"), c.bounds.r_cruise_m, "r_cruise_m");
  read_bounds(b.at("r_hover_m"), c.bounds.r_hover_m, "r_hover_m");
  read_bounds(b.at("rho_battery_wh_kg"), c.bounds.rho_battery_wh_kg,
              "rho_battery_wh_kg");
  read_bounds(b.at("c_charge_per_h"), c.bounds.c_charge_per_h,
              "c_charge_per_h");

  const json& a = j.at("aero");
  c.aero.airfoil_lift_slope = a.at("airfoil_lift_slope");
  c.aero.cl_at_zero_alpha = a.at("cl_at_zero_alpha");
  c.aero.oswald_e = a.at("oswald_e");
  c.aero.cd_min = a.at("cd_min");
  c.aero.alpha_cruise_deg = a.at("alpha_cruise_deg");
  c.aero.alpha_max_deg = a.at("alpha_max_deg");

  const json& p = j.at("propulsion");
  c.prop.gravity = p.at("gravity");
  c.prop.lift_rotor_count = p.at("lift_rotor_count");
  c.prop.eta_hover = p.at("eta_hover");
  c.prop.eta_climb = p.at("eta_climb");
  c.prop.eta_cruise = p.at("eta_cruise");
  c.prop.thrust_coefficient = p.at("thrust_coefficient");
  c.prop.motor_sizing_margin = p.at("motor_sizing_margin");

  const json& ms = j.at("mass");
  c.mass.pax_mass_kg = ms.at("pax_mass_kg");
  c.mass.luggage_mass_kg = ms.at("luggage_mass_kg");
  c.mass.sizing_load_factor = ms.at("sizing_load_factor");
  c.mass.crew_mass_kg = ms.at("crew_mass_kg");
  c.mass.ultimate_load_factor = ms.at("ultimate_load_factor");
  c.mass.wing_coeff = ms.at("wing_coeff");
  c.mass.wing_area_exp = ms.at("wing_area_exp");
  c.mass.wing_ar_exp = ms.at("wing_ar_exp");
  c.mass.wing_load_exp = ms.at("wing_load_exp");
  c.mass.fuselage_coeff = ms.at("fuselage_coeff");
  c.mass.fuselage_exp = ms.at("fuselage_exp");
  c.mass.gear_fraction = ms.at("gear_fraction");
  c.mass.rotor_coeff = ms.at("rotor_coeff");
  c.mass.rotor_exp = ms.at("rotor_exp");
  c.mass.motor_specific_power = ms.at("motor_specific_power");
  c.mass.systems_coeff = ms.at("systems_coeff");
  c.mass.systems_exp = ms.at("systems_exp");
  c.mass.furnish_slope = ms.at("furnish_slope");
  c.mass.furnish_offset = ms.at("furnish_offset");
  c.mass.fixed_point_tol_kg = ms.at("fixed_point_tol_kg");
  c.mass.fixed_point_max_iter = ms.at("fixed_point_max_iter");
  c.mass.mtom_guess_kg = ms.at("mtom_guess_kg");
  c.mass.regression_valid_lo_kg = ms.at("regression_valid_lo_kg");
  c.mass.regression_valid_hi_kg = ms.at("regression_valid_hi_kg");

  const json& bt = j.at("battery");
  c.battery.usable_fraction = bt.at("usable_fraction");
  c.battery.cycle_ref = bt.at("cycle_ref");
  c.battery.dod_ref = bt.at("dod_ref");
  c.battery.c_ref = bt.at("c_ref");
  c.battery.k_dod = bt.at("k_dod");
  c.battery.k_charge = bt.at("k_charge");
  c.battery.k_discharge = bt.at("k_discharge");

  const json& ac = j.at("acoustics");
  c.acoustics.blade_count = ac.at("blade_count");
  c.acoustics.solidity = ac.at("solidity");
  c.acoustics.effective_radius_frac = ac.at("effective_radius_frac");
  c.acoustics.speed_of_sound = ac.at("speed_of_sound");
  c.acoustics.observer_distance_hover_m = ac.at("observer_distance_hover_m");
  c.acoustics.observer_distance_climb_m = ac.at("observer_distance_climb_m");
  c.acoustics.observer_distance_cruise_m = ac.at("observer_distance_cruise_m");
  c.acoustics.observer_elevation_deg = ac.at("observer_elevation_deg");
  c.acoustics.broadband_const_db = ac.at("broadband_const_db");
  c.acoustics.broadband_cl_ref = ac.at("broadband_cl_ref");
  c.acoustics.apply_a_weighting = ac.at("apply_a_weighting");
  c.acoustics.p_ref = ac.at("p_ref");

  const json& f = j.at("fom");
  const json& w = f.at("weights");
  if (!w.is_array() || w.size() != 3) {
    throw ScenarioError("fom.weights: expected [w_cost, w_co2, w_time]");
  }
  for (int i = 0; i < 3; ++i) c.fom.weights[i] = w[i].get<double>();
  c.fom.pax_basis = f.at("pax_basis");

  const json& bm = j.at("benchmark");
  c.benchmark.label = bm.at("label");
  c.benchmark.mtom_kg = bm.at("mtom_kg");
  c.benchmark.rho_battery_wh_kg = bm.at("rho_battery_wh_kg");
  c.benchmark.cycle_life = bm.at("cycle_life");
  c.benchmark.capacity_kwh = bm.at("capacity_kwh");
  c.benchmark.cruise_speed_kmh = bm.at("cruise_speed_kmh");
  c.benchmark.motion_efficiency_km_kwh = bm.at("motion_efficiency_km_kwh");
  c.benchmark.hover_power_kw = bm.at("hover_power_kw");
  c.benchmark.cruise_power_kw = bm.at("cruise_power_kw");
  c.benchmark.lift_to_drag = bm.at("lift_to_drag");
  c.benchmark.cost_per_pax_km = bm.at("cost_per_pax_km");
  c.benchmark.cost_per_pax_min = bm.at("cost_per_pax_min");
  c.benchmark.pooled_trip_cost = bm.at("pooled_trip_cost");
  c.benchmark.annual_flight_hours = bm.at("annual_flight_hours");
  c.benchmark.load_factor = bm.at("load_factor");
  c.benchmark.share_pilot = bm.at("share_pilot");
  c.benchmark.share_maintenance = bm.at("share_maintenance");
  c.benchmark.share_battery = bm.at("share_battery");
  c.benchmark.share_energy = bm.at("share_energy");
  c.benchmark.share_ownership = bm.at("share_ownership");
  return c;
}

void require(bool ok, const char* field, const char* what) {
  if (!ok) {
    throw ScenarioError(std::string(field) + ": " + what);
  }
}

}  // namespace

void validate(const ScenarioConfig& c) {
  require(c.mission.trip_distance_m > 0, "mission.trip_distance_m",
          "must be > 0");
  require(c.mission.cruise_altitude_m > 0, "mission.cruise_altitude_m",
          "must be > 0");
  require(c.mission.hover_time_s >= 0, "mission.hover_time_s", "must be >= 0");
  require(c.mission.reserve_time_min >= 0, "mission.reserve_time_min",
          "must be >= 0");
  require(c.mission.climb_angle_deg > 0 && c.mission.climb_angle_deg < 90,
          "mission.climb_angle_deg", "must be in (0, 90)");
  require(c.mission.air_density_sl > 0 && c.mission.air_density_cruise > 0,
          "mission.air_density", "must be > 0");

  require(c.ops.load_factor > 0 && c.ops.load_factor <= 1,
          "operations.load_factor", "must be in (0, 1]");
  require(c.ops.working_days >= 1 && c.ops.working_days <= 366,
          "operations.working_days", "must be in [1, 366]");
  require(c.ops.daily_window_h > 0 && c.ops.daily_window_h <= 24,
          "operations.daily_window_h", "must be in (0, 24]");
  require(c.ops.seats >= 1, "operations.seats", "must be >= 1");

  require(c.econ.electricity_price_kwh >= 0 && c.econ.fare_per_km >= 0 &&
              c.econ.battery_pack_price_kwh >= 0 &&
              c.econ.annual_crew_cost >= 0 &&
              c.econ.maintenance_wrap_rate_fh >= 0 &&
              c.econ.nav_unit_rate >= 0 &&
              c.econ.acquisition_price_per_kg >= 0,
          "economics", "prices must be >= 0");
  require(c.econ.ioc_fraction >= 0 && c.econ.ioc_fraction < 1,
          "economics.ioc_fraction", "must be in [0, 1)");
  require(c.econ.insurance_fraction >= 0 && c.econ.insurance_fraction < 1,
          "economics.insurance_fraction", "must be in [0, 1)");
  require(c.econ.depreciation_years > 0, "economics.depreciation_years",
          "must be > 0");

  require(c.env.grid_gwp_kwh >= 0, "environment.grid_gwp_kwh", "must be >= 0");
  require(c.env.battery_gwp_kwh >= 0, "environment.battery_gwp_kwh",
          "must be >= 0");

  require(c.limits.mtom_limit_kg > 0 && c.limits.spl_hover_limit_db > 0 &&
              c.limits.rpm_limit > 0 && c.limits.speed_limit_ms > 0 &&
              c.limits.vertiport_width_m > 0 &&
              c.limits.rotor_clearance_m > 0 &&
              c.limits.fuselage_radius_m > 0,
          "limits", "all limits must be > 0");

  const auto bounds = bounds_array(c.bounds);
  for (int i = 0; i < DesignVector::kSize; ++i) {
    if (!(bounds[i].lo < bounds[i].hi)) {
      throw ScenarioError(std::string("bounds.") + DesignVector::names()[i] +
                          ": lo must be < hi");
    }
  }

  require(c.aero.oswald_e > 0 && c.aero.oswald_e <= 1, "aero.oswald_e",
          "must be in (0, 1]");
  require(c.aero.cd_min > 0, "aero.cd_min", "must be > 0");
  require(c.aero.airfoil_lift_slope > 0, "aero.airfoil_lift_slope",
          "must be > 0");
  require(c.aero.alpha_max_deg > 0, "aero.alpha_max_deg", "must be > 0");

  require(c.prop.lift_rotor_count >= 1, "propulsion.lift_rotor_count",
          "must be >= 1");
  require(c.prop.eta_hover > 0 && c.prop.eta_climb > 0 && c.prop.eta_cruise > 0,
          "propulsion.eta", "efficiencies must be > 0");
  require(c.prop.thrust_coefficient > 0, "propulsion.thrust_coefficient",
          "must be > 0");
  require(c.prop.gravity > 0, "propulsion.gravity", "must be > 0");

  require(c.mass.fixed_point_tol_kg > 0, "mass.fixed_point_tol_kg",
          "must be > 0");
  require(c.mass.fixed_point_max_iter > 0, "mass.fixed_point_max_iter",
          "must be > 0");
  require(c.mass.sizing_load_factor >= 0 && c.mass.sizing_load_factor <= 1,
          "mass.sizing_load_factor", "must be in [0, 1]");

  require(c.battery.usable_fraction > 0 && c.battery.usable_fraction <= 1,
          "battery.usable_fraction", "must be in (0, 1]");
  require(c.battery.cycle_ref > 0, "battery.cycle_ref", "must be > 0");

  require(c.acoustics.blade_count >= 1, "acoustics.blade_count",
          "must be >= 1");
  require(c.acoustics.solidity > 0 && c.acoustics.solidity < 1,
          "acoustics.solidity", "must be in (0, 1)");
  require(c.acoustics.speed_of_sound > 0, "acoustics.speed_of_sound",
          "must be > 0");
  require(c.acoustics.p_ref > 0, "acoustics.p_ref", "must be > 0");

  double wsum = 0;
  for (double w : c.fom.weights) {
    require(w >= 0, "fom.weights", "must be >= 0");
    wsum += w;
  }
  require(std::abs(wsum - 1.0) < 1e-9, "fom.weights", "must sum to 1");
  require(c.fom.pax_basis == "seats_times_lf" || c.fom.pax_basis == "seats",
          "fom.pax_basis", "must be 'seats_times_lf' or 'seats'");
}

ScenarioConfig scenario_from_json_text(const std::string& text) {
  json user;
  try {
    user = text.empty() ? json::object() : json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario parse failure: ") + e.what());
  }
  if (user.is_null()) user = json::object();
  json merged = scenario_json(ScenarioConfig{});
  check_known_keys(user, merged, "");
  merged.merge_patch(user);
  ScenarioConfig cfg;
  try {
    cfg = scenario_from_merged(merged);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario field type error: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str());
}

std::string scenario_to_json_text(const ScenarioConfig& cfg, int indent) {
  return scenario_json(cfg).dump(indent);
}

void save_scenario(const ScenarioConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ScenarioError("cannot write scenario file: " + path);
  }
  out << scenario_to_json_text(cfg) << "\n";
}

DesignVector design_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("design parse failure: ") + e.what());
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* name : DesignVector::names()) {
      if (it.key() == name) known = true;
    }
    if (!known) {
      throw ScenarioError("unknown design field '" + it.key() + "'");
    }
  }
  DesignVector d;
  try {
    d.span_m = j.at("span_m");
    d.chord_m = j.at("chord_m");
    d.r_cruise_m = j.at("r_cruise_m");
    d.r_hover_m = j.at("r_hover_m");
    d.rho_battery_wh_kg = j.at("rho_battery_wh_kg");
    d.c_charge_per_h = j.at("c_charge_per_h");
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("design field error: ") + e.what());
  }
  return d;
}

DesignVector load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open design file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return design_from_json_text(ss.str());
}

std::string design_to_json_text(const DesignVector& d, int indent) {
  json j = {
      {"span_m", d.span_m},
      {"chord_m", d.chord_m},
      {"r_cruise_m", d.r_cruise_m},
      {"r_hover_m", d.r_hover_m},
      {"rho_battery_wh_kg", d.rho_battery_wh_kg},
      {"c_charge_per_h", d.c_charge_per_h},
  };
  return j.dump(indent);
}

std::string scenario_fingerprint(const ScenarioConfig& cfg) {
  // FNV-1a over the canonical dump (nlohmann orders object keys), so the
  // fingerprint changes iff some configuration value changes.
  const std::string dump = scenario_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace evtol
