#include "evtol/aero.hpp"

#include <cmath>
#include <numbers>

namespace evtol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
}  // namespace

WingAero make_wing(double span_m, double chord_m, const AeroConfig& cfg) {
  if (span_m <= 0 || chord_m <= 0) {
    throw ModelError(ModelErrorCode::kBadInput, "wing span/chord must be > 0");
  }
  WingAero w;
  w.area_m2 = span_m * chord_m;
  w.aspect_ratio = span_m / chord_m;
  w.oswald_e = cfg.oswald_e;
  w.lift_slope = cfg.airfoil_lift_slope;
  w.cl0 = cfg.cl_at_zero_alpha;
  w.cd_min = cfg.cd_min;
  w.alpha_max_rad = cfg.alpha_max_deg * kDeg;
  return w;
}

double wing_lift_slope(const WingAero& w) {
  return w.lift_slope / (1.0 + w.lift_slope / (kPi * w.aspect_ratio * w.oswald_e));
}

double lift_coefficient(const WingAero& w, double alpha_rad) {
  if (std::abs(alpha_rad) > w.alpha_max_rad) {
    throw ModelError(ModelErrorCode::kAlphaOutOfRange,
                     "angle of attack outside the linear lift range");
  }
  return wing_lift_slope(w) * alpha_rad + w.cl0;
}

double drag_coefficient(const WingAero& w, double cl) {
  return w.cd_min + cl * cl / (kPi * w.aspect_ratio * w.oswald_e);
}

double lift_to_drag(const WingAero& w, double cl) {
  return cl / drag_coefficient(w, cl);
}

double aero_force_n(const WingAero& w, double rho, double speed_ms,
                    double coeff) {
  return 0.5 * rho * speed_ms * speed_ms * w.area_m2 * coeff;
}

double best_ld_cl(const WingAero& w) {
  return std::sqrt(w.cd_min * kPi * w.aspect_ratio * w.oswald_e);
}

}  // namespace evtol
