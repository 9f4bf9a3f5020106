#pragma once

#include "evtol/aero.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

enum class Phase { kHover, kClimb, kCruise };

struct PhaseState {
  Phase phase = Phase::kHover;
  double power_kw = 0.0;   // total electric power drawn in the phase
  double speed_ms = 0.0;
  double time_s = 0.0;
  double energy_kwh = 0.0;
  double thrust_n = 0.0;   // per lift rotor in hover; pusher thrust otherwise
  double rpm = 0.0;        // lift rotor in hover; pusher otherwise
  double tip_speed_ms = 0.0;
  double distance_m = 0.0; // horizontal ground distance covered
};

struct EnergyBudget {
  double e_trip_kwh = 0.0;
  double e_reserve_kwh = 0.0;
  double e_usable_kwh = 0.0;  // e_trip + e_reserve
  double e_design_kwh = 0.0;  // e_usable / usable_fraction
  double dod = 0.0;           // e_trip / e_design
  double e_usable_wh_kg = 0.0;
};

struct MissionResult {
  PhaseState hover;
  PhaseState climb;
  PhaseState cruise;
  double reserve_power_kw = 0.0;  // loiter at cruise power
  double reserve_time_s = 0.0;
  EnergyBudget budget;
  double flight_time_s = 0.0;     // hover + climb + cruise (reserve excluded)
  // Cruise/climb aero operating points, kept for reports and noise.
  double cruise_cl = 0.0;
  double cruise_cd = 0.0;
  double cruise_ld = 0.0;
  double climb_cl = 0.0;
};

// Momentum-theory induced velocity at an actuator disk; the axial_speed term
// is the climb-rate correction and vanishes in hover.
double induced_velocity(double thrust_n, double rho, double disk_area_m2,
                        double axial_speed_ms = 0.0);

// Total hover power for n identical lift rotors sharing the weight equally.
double hover_power_kw(double mtom_kg, double r_hover_m, int n_lift, double rho,
                      double eta, double gravity);

// Level-flight force-balance speed at the configured angle of attack.
double cruise_speed_ms(double mtom_kg, const WingAero& wing, double alpha_rad,
                       double rho, double gravity);

// Shaft speed from the thrust-coefficient mapping T = C_T rho A (omega R)^2.
double rotor_tip_speed(double thrust_n, double radius_m, double rho, double ct);
double rotor_rpm(double thrust_n, double radius_m, double rho, double ct);

// Full sizing-mission profile for a given MTOM: hover, wingborne climb to
// altitude, cruise over the remaining distance, reserve loiter at cruise
// power. Descent earns neither distance nor energy credit. Throws
// ModelError(kInfeasibleMission) when the climb alone overshoots the trip.
MissionResult fly_mission(double mtom_kg, const DesignVector& design,
                          const ScenarioConfig& cfg);

double depth_of_discharge(const EnergyBudget& budget);

}  // namespace evtol
