#pragma once

#include <array>
#include <string>

#include "evtol/errors.hpp"

// Scenario configuration: the single home of every fixed constant in the
// model. Modules never read literals; they read fields of ScenarioConfig.
// Defaults below are the calibrated baseline scenario (70 km trip, 4000 ft
// cruise); docs/calibration.md records where each calibrated value comes from.

namespace evtol {

struct MissionConfig {
  double trip_distance_m = 70000.0;
  double cruise_altitude_m = 1219.2;  // 4000 ft AGL
  double hover_time_s = 60.0;         // total across departure + arrival hover
  double reserve_time_min = 20.0;     // loiter at cruise power
  double climb_angle_deg = 6.0;       // alpha = theta = gamma (no-wind climb)
  double air_density_sl = 1.225;      // kg/m^3, ISA sea level
  double air_density_cruise = 1.0879053457271046;  // kg/m^3, ISA at 1219.2 m
};

struct OperationsConfig {
  double working_days = 280.0;  // per year
  double daily_window_h = 8.0;  // operating window per working day
  double load_factor = 0.67;    // average seats filled in service
  int seats = 4;
  int pilot_count = 1;
};

struct EconomicsConfig {
  double electricity_price_kwh = 0.0967;   // EUR/kWh
  double fare_per_km = 5.38;               // EUR/km revenue
  double battery_pack_price_kwh = 115.0;   // EUR/kWh capacity
  double ioc_fraction = 0.22;              // indirect costs as share of DOC
  double insurance_fraction = 0.06;        // share of COC
  double annual_crew_cost = 47100.0;       // EUR/yr per pilot
  double maintenance_wrap_rate_fh = 33.0;  // EUR per flight hour
  double nav_unit_rate = 137.5;            // EUR, route-charge unit rate
  double acquisition_price_per_kg = 480.0; // EUR per kg MTOM
  double interest_rate = 0.05;             // annuity rate for depreciation
  double depreciation_years = 10.0;
};

struct EnvironmentConfig {
  double grid_gwp_kwh = 0.38;     // kg CO2e per kWh charged
  double battery_gwp_kwh = 124.5; // kg CO2e per kWh of pack capacity built
  // Report-only equivalents (annual emissions of one vehicle).
  double gasoline_car_tons_yr = 4.33;
  double electric_car_tons_yr = 1.13;
};

struct LimitsConfig {
  double mtom_limit_kg = 5700.0;
  double spl_hover_limit_db = 77.0;  // at 250 ft observer
  double rpm_limit = 3000.0;         // any rotor, any phase
  double speed_limit_ms = 129.0;     // climb and cruise
  double vertiport_width_m = 15.0;
  double rotor_clearance_m = 0.05;   // gap between adjacent lift rotor disks
  double fuselage_radius_m = 0.43;
};

struct VarBounds {
  double lo = 0.0;
  double hi = 1.0;
};

struct DesignBounds {
  VarBounds span_m{6.0, 15.0};
  VarBounds chord_m{1.0, 2.5};
  VarBounds r_cruise_m{0.5, 2.5};
  VarBounds r_hover_m{0.5, 2.0};
  VarBounds rho_battery_wh_kg{200.0, 400.0};
  VarBounds c_charge_per_h{1.0, 4.0};
};

struct AeroConfig {
  double airfoil_lift_slope = 6.2;  // 1/rad, cambered GA section at Re ~ 4e6
  double cl_at_zero_alpha = 0.25;
  double oswald_e = 0.8;
  double cd_min = 0.0397;
  double alpha_cruise_deg = 4.0;
  double alpha_max_deg = 12.0;      // linear-model validity limit
};

struct PropulsionConfig {
  double gravity = 9.80665;         // m/s^2
  int lift_rotor_count = 8;
  double eta_hover = 0.63;          // lumped rotor figure of merit x drive
  double eta_climb = 0.72;
  double eta_cruise = 0.72;
  double thrust_coefficient = 0.012;  // T = C_T rho A (omega R)^2
  double motor_sizing_margin = 1.5;   // applied to required power for sizing
};

struct MassConfig {
  double pax_mass_kg = 84.0;
  double luggage_mass_kg = 14.2;
  double sizing_load_factor = 1.0;  // sizing mission flies fully loaded
  double crew_mass_kg = 85.0;
  double ultimate_load_factor = 3.8;
  // Component regressions (conceptual-design power laws; coefficients
  // calibrated against the bundled reference designs, see docs/calibration.md).
  double wing_coeff = 0.015151;     // * S^a * AR^b * (n_ult*MTOM)^c
  double wing_area_exp = 0.758;
  double wing_ar_exp = 0.6;
  double wing_load_exp = 0.49;
  double fuselage_coeff = 60.0;     // * MTOM^exp
  double fuselage_exp = 0.177;
  double gear_fraction = 0.04;      // of MTOM
  double rotor_coeff = 6.8850;      // * sum(R^exp) over all rotors
  double rotor_exp = 2.2;
  double motor_specific_power = 4.3783;  // kW per kg, margined power / this
  double systems_coeff = 0.23662;   // * MTOM^exp
  double systems_exp = 0.8;
  double furnish_slope = 0.0582;    // * MTOM + offset, floored at zero
  double furnish_offset = -29.48;
  // MTOM fixed point.
  double fixed_point_tol_kg = 1e-6;
  int fixed_point_max_iter = 200;
  double mtom_guess_kg = 1500.0;
  // Regression validity band; outside it results carry a warning flag.
  double regression_valid_lo_kg = 500.0;
  double regression_valid_hi_kg = 5700.0;
};

struct BatteryConfig {
  double usable_fraction = 0.64;  // end-of-life capacity x usable SoC window
  // Cycle life N = cycle_ref * (dod_ref/DoD)^k_dod * (c_ref/C_ch)^k_charge
  //                          * (c_ref/C_dis)^k_discharge
  double cycle_ref = 4520.4;
  double dod_ref = 1.0;
  double c_ref = 1.0;
  double k_dod = 0.05;
  double k_charge = 1.1872;
  double k_discharge = 1.0333;
};

struct AcousticsConfig {
  int blade_count = 3;
  double solidity = 0.1;               // blade area / disk area
  double effective_radius_frac = 0.8;  // loading radius as fraction of R
  double speed_of_sound = 340.3;       // m/s
  double observer_distance_hover_m = 76.2;    // 250 ft
  double observer_distance_climb_m = 76.2;    // 250 ft
  double observer_distance_cruise_m = 1219.2; // cruise altitude
  double observer_elevation_deg = 10.0;  // observer angle below the disk plane
  double broadband_const_db = -59.0;     // SI-form level constant
  double broadband_cl_ref = 0.4;         // blade-CL correction kicks in above
  bool apply_a_weighting = false;        // see docs/calibration.md
  double p_ref = 2e-5;                   // Pa
};

struct FomConfig {
  // Criterion order: cost, co2, time.
  std::array<double, 3> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  // Divisor for the aircraft's per-trip cost/co2 when inserted into the mode
  // pool: "seats_times_lf" (per passenger at service load factor) or "seats".
  std::string pax_basis = "seats_times_lf";
};

// Requirement column for the industry benchmark report.
struct BenchmarkConfig {
  std::string label = "requirement";
  double mtom_kg = 1814.0;
  double rho_battery_wh_kg = 400.0;
  double cycle_life = 2000.0;
  double capacity_kwh = 140.0;
  double cruise_speed_kmh = 320.0;
  double motion_efficiency_km_kwh = 1.24;
  double hover_power_kw = 500.0;
  double cruise_power_kw = 120.0;
  double lift_to_drag = 13.0;
  double cost_per_pax_km = 0.27;
  double cost_per_pax_min = 1.27;
  double pooled_trip_cost = 19.0;
  double annual_flight_hours = 2080.0;
  double load_factor = 0.67;
  double share_pilot = 0.36;        // of direct operating cost
  double share_maintenance = 0.22;
  double share_battery = 0.02;
  double share_energy = 0.12;
  double share_ownership = 0.08;
};

struct ScenarioConfig {
  MissionConfig mission;
  OperationsConfig ops;
  EconomicsConfig econ;
  EnvironmentConfig env;
  LimitsConfig limits;
  DesignBounds bounds;
  AeroConfig aero;
  PropulsionConfig prop;
  MassConfig mass;
  BatteryConfig battery;
  AcousticsConfig acoustics;
  FomConfig fom;
  BenchmarkConfig benchmark;
};

// The six free variables of the design problem.
struct DesignVector {
  double span_m = 10.0;
  double chord_m = 1.5;
  double r_cruise_m = 1.0;
  double r_hover_m = 1.0;
  double rho_battery_wh_kg = 300.0;
  double c_charge_per_h = 2.0;

  static constexpr int kSize = 6;
  std::array<double, kSize> as_array() const {
    return {span_m, chord_m, r_cruise_m, r_hover_m, rho_battery_wh_kg,
            c_charge_per_h};
  }
  static DesignVector from_array(const std::array<double, kSize>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }
  static const std::array<const char*, kSize>& names();
};

// Bounds access in DesignVector order.
std::array<VarBounds, DesignVector::kSize> bounds_array(const DesignBounds& b);

// Returns the name of the first out-of-bounds variable, or nullptr.
const char* first_bounds_violation(const DesignVector& d,
                                   const DesignBounds& b);

// Map between physical space and the optimizer's [0,1]^6.
std::array<double, DesignVector::kSize> normalize_design(
    const DesignVector& d, const DesignBounds& b);
DesignVector denormalize_design(const std::array<double, DesignVector::kSize>& z,
                                const DesignBounds& b);

// Construction, validation, serialization. Loading merges the file over the
// defaults; unknown keys and invariant violations raise ScenarioError naming
// the field. Round-trip (save then load) reproduces the scenario exactly.
void validate(const ScenarioConfig& cfg);
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const ScenarioConfig& cfg, int indent = 2);
void save_scenario(const ScenarioConfig& cfg, const std::string& path);

DesignVector load_design(const std::string& path);
DesignVector design_from_json_text(const std::string& text);
std::string design_to_json_text(const DesignVector& d, int indent = 2);

// Stable 16-hex-digit hash of the complete configuration; embedded in every
// report so outputs from different scenarios cannot be mixed up silently.
std::string scenario_fingerprint(const ScenarioConfig& cfg);

}  // namespace evtol
