#include "evtol/acoustics.hpp"

#include <cmath>
#include <numbers>

namespace evtol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

double db_from_pressure(double p_pa, double p_ref) {
  return 20.0 * std::log10(std::max(p_pa, 1e-30) / p_ref);
}
}  // namespace

double a_weighting_db(double freq_hz) {
  const double f2 = freq_hz * freq_hz;
  const double c1 = 20.6 * 20.6;
  const double c2 = 107.7 * 107.7;
  const double c3 = 737.9 * 737.9;
  const double c4 = 12194.0 * 12194.0;
  const double ra = c4 * f2 * f2 /
                    ((f2 + c1) * std::sqrt((f2 + c2) * (f2 + c3)) * (f2 + c4));
  return 20.0 * std::log10(ra) + 2.0;
}

double hover_spl_tonal(double thrust_per_rotor_n, double power_per_rotor_kw,
                       double radius_m, double rpm, int n_rotors,
                       const AcousticsConfig& cfg) {
  if (rpm <= 0 || radius_m <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "hover_spl_tonal: rpm and radius must be > 0");
  }
  const double omega = rpm * 2.0 * kPi / 60.0;
  const double r_eff = cfg.effective_radius_frac * radius_m;
  const double torque = power_per_rotor_kw * 1000.0 / omega;
  const double c0 = cfg.speed_of_sound;
  const double dist = cfg.observer_distance_hover_m;
  // Polar angle from the rotor axis; 90 deg is the disk plane.
  const double theta = (90.0 + cfg.observer_elevation_deg) * kDeg;
  const int harmonic = cfg.blade_count;  // first harmonic of a B-bladed rotor

  const double bessel_arg = harmonic * omega * r_eff * std::sin(theta) / c0;
  const double bessel = std::cyl_bessel_j(double(harmonic), bessel_arg);
  const double dipoles = thrust_per_rotor_n * std::cos(theta) -
                         torque * c0 / (omega * r_eff * r_eff);
  const double p = std::abs(harmonic * omega /
                            (2.0 * std::numbers::sqrt2 * kPi * c0 * dist) *
                            dipoles * bessel);

  double spl = db_from_pressure(p, cfg.p_ref) + 10.0 * std::log10(double(n_rotors));
  if (cfg.apply_a_weighting) {
    const double bpf_hz = cfg.blade_count * rpm / 60.0;
    spl += a_weighting_db(bpf_hz);
  }
  return spl;
}

double broadband_spl(double blade_area_m2, double tip_speed_ms,
                     double blade_cl, double observer_distance_m,
                     const AcousticsConfig& cfg) {
  if (blade_area_m2 <= 0 || tip_speed_ms <= 0 || observer_distance_m <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "broadband_spl: area, tip speed, distance must be > 0");
  }
  const double v07 = 0.7 * tip_speed_ms;
  double spl = cfg.broadband_const_db + 10.0 * std::log10(blade_area_m2) +
               60.0 * std::log10(v07);
  if (blade_cl > cfg.broadband_cl_ref) {
    spl += 10.0 * std::log10(blade_cl / cfg.broadband_cl_ref);
  }
  spl -= 20.0 * std::log10(observer_distance_m / cfg.observer_distance_hover_m);
  return spl;
}

AcousticState assess_noise(const DesignVector& design,
                           const MissionResult& mission,
                           const ScenarioConfig& cfg) {
  const AcousticsConfig& ac = cfg.acoustics;
  AcousticState s;
  s.tip_speed_hover_ms = mission.hover.tip_speed_ms;
  s.tip_speed_climb_ms = mission.climb.tip_speed_ms;
  s.tip_speed_cruise_ms = mission.cruise.tip_speed_ms;
  s.blade_area_m2 =
      ac.solidity * kPi * design.r_cruise_m * design.r_cruise_m;
  // Mean blade lift coefficient implied by the thrust-coefficient mapping.
  s.blade_cl = 6.0 * cfg.prop.thrust_coefficient / ac.solidity;
  s.bpf_hover_hz = ac.blade_count * mission.hover.rpm / 60.0;

  const int n = cfg.prop.lift_rotor_count;
  s.spl_hover_db =
      hover_spl_tonal(mission.hover.thrust_n, mission.hover.power_kw / n,
                      design.r_hover_m, mission.hover.rpm, n, ac);
  // The climb state can be zeroed for a degenerate hover-only mission.
  s.spl_climb_db =
      mission.climb.tip_speed_ms > 0
          ? broadband_spl(s.blade_area_m2, mission.climb.tip_speed_ms,
                          s.blade_cl, ac.observer_distance_climb_m, ac)
          : 0.0;
  s.spl_cruise_db =
      mission.cruise.tip_speed_ms > 0
          ? broadband_spl(s.blade_area_m2, mission.cruise.tip_speed_ms,
                          s.blade_cl, ac.observer_distance_cruise_m, ac)
          : 0.0;
  return s;
}

}  // namespace evtol
