#include "evtol/mission.hpp"

#include <cmath>
#include <numbers>

namespace evtol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
constexpr double kSecPerHour = 3600.0;
}  // namespace

double induced_velocity(double thrust_n, double rho, double disk_area_m2,
                        double axial_speed_ms) {
  if (rho <= 0 || disk_area_m2 <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "induced_velocity: density and disk area must be > 0");
  }
  const double half_v = 0.5 * axial_speed_ms;
  return -half_v + std::sqrt(half_v * half_v +
                             thrust_n / (2.0 * rho * disk_area_m2));
}

double hover_power_kw(double mtom_kg, double r_hover_m, int n_lift, double rho,
                      double eta, double gravity) {
  if (r_hover_m <= 0 || n_lift < 1 || eta <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "hover_power: radius, rotor count, eta must be > 0");
  }
  const double thrust = mtom_kg * gravity / n_lift;
  const double area = kPi * r_hover_m * r_hover_m;
  const double v_i = induced_velocity(thrust, rho, area);
  return n_lift * thrust * v_i / eta / 1000.0;
}

double cruise_speed_ms(double mtom_kg, const WingAero& wing, double alpha_rad,
                       double rho, double gravity) {
  const double cl = lift_coefficient(wing, alpha_rad);
  if (cl <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "cruise_speed: non-positive lift coefficient");
  }
  return std::sqrt(2.0 * mtom_kg * gravity / (rho * wing.area_m2 * cl));
}

double rotor_tip_speed(double thrust_n, double radius_m, double rho,
                       double ct) {
  if (radius_m <= 0 || rho <= 0 || ct <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "rotor_tip_speed: radius, rho, C_T must be > 0");
  }
  const double area = kPi * radius_m * radius_m;
  return std::sqrt(std::max(thrust_n, 0.0) / (ct * rho * area));
}

double rotor_rpm(double thrust_n, double radius_m, double rho, double ct) {
  const double omega = rotor_tip_speed(thrust_n, radius_m, rho, ct) / radius_m;
  return omega * 60.0 / (2.0 * kPi);
}

double depth_of_discharge(const EnergyBudget& budget) {
  if (budget.e_design_kwh <= 0) {
    return 0.0;
  }
  return budget.e_trip_kwh / budget.e_design_kwh;
}

MissionResult fly_mission(double mtom_kg, const DesignVector& design,
                          const ScenarioConfig& cfg) {
  const double g = cfg.prop.gravity;
  const double rho_sl = cfg.mission.air_density_sl;
  const double rho_cr = cfg.mission.air_density_cruise;
  const WingAero wing = make_wing(design.span_m, design.chord_m, cfg.aero);

  MissionResult r;

  // Hover: lift rotors carry the weight in equal shares at sea level.
  {
    PhaseState& h = r.hover;
    h.phase = Phase::kHover;
    h.time_s = cfg.mission.hover_time_s;
    h.thrust_n = mtom_kg * g / cfg.prop.lift_rotor_count;
    h.power_kw = hover_power_kw(mtom_kg, design.r_hover_m,
                                cfg.prop.lift_rotor_count, rho_sl,
                                cfg.prop.eta_hover, g);
    h.tip_speed_ms = rotor_tip_speed(h.thrust_n, design.r_hover_m, rho_sl,
                                     cfg.prop.thrust_coefficient);
    h.rpm = rotor_rpm(h.thrust_n, design.r_hover_m, rho_sl,
                      cfg.prop.thrust_coefficient);
    h.energy_kwh = h.power_kw * h.time_s / kSecPerHour;
  }

  // Climb: wingborne at alpha = theta (no-wind equivalence); the wing holds
  // W cos(theta), the pusher covers the slope component plus drag.
  const double theta = cfg.mission.climb_angle_deg * kDeg;
  {
    PhaseState& c = r.climb;
    c.phase = Phase::kClimb;
    const double cl = lift_coefficient(wing, theta);
    r.climb_cl = cl;
    if (cl <= 0) {
      throw ModelError(ModelErrorCode::kBadInput,
                       "climb: non-positive lift coefficient");
    }
    c.speed_ms = std::sqrt(2.0 * mtom_kg * g * std::cos(theta) /
                           (rho_sl * wing.area_m2 * cl));
    const double drag =
        aero_force_n(wing, rho_sl, c.speed_ms, drag_coefficient(wing, cl));
    c.thrust_n = mtom_kg * g * std::sin(theta) + drag;
    c.power_kw = c.thrust_n * c.speed_ms / cfg.prop.eta_climb / 1000.0;
    c.time_s = cfg.mission.cruise_altitude_m / (c.speed_ms * std::sin(theta));
    c.distance_m = c.speed_ms * std::cos(theta) * c.time_s;
    c.tip_speed_ms = rotor_tip_speed(c.thrust_n, design.r_cruise_m, rho_sl,
                                     cfg.prop.thrust_coefficient);
    c.rpm = rotor_rpm(c.thrust_n, design.r_cruise_m, rho_sl,
                      cfg.prop.thrust_coefficient);
    c.energy_kwh = c.power_kw * c.time_s / kSecPerHour;
  }

  // Cruise: lift = weight at the cruise angle of attack, thrust = drag.
  {
    PhaseState& cr = r.cruise;
    cr.phase = Phase::kCruise;
    const double alpha = cfg.aero.alpha_cruise_deg * kDeg;
    const double cl = lift_coefficient(wing, alpha);
    r.cruise_cl = cl;
    r.cruise_cd = drag_coefficient(wing, cl);
    r.cruise_ld = cl / r.cruise_cd;
    cr.speed_ms = cruise_speed_ms(mtom_kg, wing, alpha, rho_cr, g);
    cr.thrust_n = aero_force_n(wing, rho_cr, cr.speed_ms, r.cruise_cd);
    cr.power_kw = cr.thrust_n * cr.speed_ms / cfg.prop.eta_cruise / 1000.0;
    cr.tip_speed_ms = rotor_tip_speed(cr.thrust_n, design.r_cruise_m, rho_cr,
                                      cfg.prop.thrust_coefficient);
    cr.rpm = rotor_rpm(cr.thrust_n, design.r_cruise_m, rho_cr,
                       cfg.prop.thrust_coefficient);
  }

  // Distance bookkeeping. Descent earns no credit: cruise spans whatever the
  // climb left over. A zero-distance mission degenerates to hover only.
  const double trip = cfg.mission.trip_distance_m;
  if (trip <= 0.0) {
    r.climb = PhaseState{};
    r.climb.phase = Phase::kClimb;
    r.cruise.time_s = 0.0;
    r.cruise.energy_kwh = 0.0;
    r.cruise.distance_m = 0.0;
  } else {
    if (r.climb.distance_m > trip) {
      throw ModelError(ModelErrorCode::kInfeasibleMission,
                       "climb segment longer than the trip distance");
    }
    r.cruise.distance_m = trip - r.climb.distance_m;
    r.cruise.time_s = r.cruise.distance_m / r.cruise.speed_ms;
    r.cruise.energy_kwh = r.cruise.power_kw * r.cruise.time_s / kSecPerHour;
  }

  r.reserve_power_kw = r.cruise.power_kw;
  r.reserve_time_s = cfg.mission.reserve_time_min * 60.0;
  r.flight_time_s = r.hover.time_s + r.climb.time_s + r.cruise.time_s;

  EnergyBudget& b = r.budget;
  b.e_trip_kwh =
      r.hover.energy_kwh + r.climb.energy_kwh + r.cruise.energy_kwh;
  b.e_reserve_kwh = r.reserve_power_kw * r.reserve_time_s / kSecPerHour;
  b.e_usable_kwh = b.e_trip_kwh + b.e_reserve_kwh;
  b.e_design_kwh = b.e_usable_kwh / cfg.battery.usable_fraction;
  b.dod = depth_of_discharge(b);
  b.e_usable_wh_kg = cfg.battery.usable_fraction * design.rho_battery_wh_kg;
  return r;
}

}  // namespace evtol
