#pragma once

#include "evtol/mission.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

struct AcousticState {
  double spl_hover_db = 0.0;   // tonal, all lift rotors, hover observer
  double spl_climb_db = 0.0;   // broadband, pusher, climb observer
  double spl_cruise_db = 0.0;  // broadband, pusher, cruise observer
  double tip_speed_hover_ms = 0.0;
  double tip_speed_climb_ms = 0.0;
  double tip_speed_cruise_ms = 0.0;
  double blade_area_m2 = 0.0;  // pusher blade area used by the broadband model
  double blade_cl = 0.0;
  double bpf_hover_hz = 0.0;   // blade passage frequency in hover
};

// Standard analytic A-weighting curve, dB offset at the given frequency
// (0 dB at 1 kHz, strongly negative at rotor blade-passage frequencies).
double a_weighting_db(double freq_hz);

// First-harmonic rotational-noise level of one hovering rotor from its thrust
// and torque dipoles, evaluated at the effective radius, plus an incoherent
// +10*log10(n_rotors) for the set. Angles: the observer sits slightly below
// the disk plane (config), where the thrust term radiates.
double hover_spl_tonal(double thrust_per_rotor_n, double power_per_rotor_kw,
                       double radius_m, double rpm, int n_rotors,
                       const AcousticsConfig& cfg);

// Semi-empirical broadband level from blade area and tip speed (V^6 law) with
// a blade-lift correction above the reference CL and spherical spreading away
// from the model's built-in observer distance.
double broadband_spl(double blade_area_m2, double tip_speed_ms, double blade_cl,
                     double observer_distance_m, const AcousticsConfig& cfg);

// Noise summary for a sized design flying the standard mission.
AcousticState assess_noise(const DesignVector& design,
                           const MissionResult& mission,
                           const ScenarioConfig& cfg);

}  // namespace evtol
