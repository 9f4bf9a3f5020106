#pragma once

#include "evtol/scenario.hpp"

namespace evtol {

// Finite rectangular wing with a linear lift curve and a parabolic polar.
struct WingAero {
  double area_m2 = 0.0;       // b * c
  double aspect_ratio = 0.0;  // b / c for the rectangular planform
  double oswald_e = 0.8;
  double lift_slope = 6.2;    // airfoil (2D) slope, 1/rad
  double cl0 = 0.25;
  double cd_min = 0.0397;
  double alpha_max_rad = 0.0; // linear-model validity limit
};

WingAero make_wing(double span_m, double chord_m, const AeroConfig& cfg);

// 3D lift-curve slope after the finite-wing correction.
double wing_lift_slope(const WingAero& w);

// CL at the given angle of attack. Throws ModelError(kAlphaOutOfRange) when
// |alpha| exceeds the configured linear range: silent post-stall use would
// produce garbage speeds.
double lift_coefficient(const WingAero& w, double alpha_rad);

double drag_coefficient(const WingAero& w, double cl);
double lift_to_drag(const WingAero& w, double cl);

// q * S * coefficient; used for both lift and drag.
double aero_force_n(const WingAero& w, double rho, double speed_ms, double coeff);

// CL at the polar's best L/D: sqrt(cd_min * pi * AR * e).
double best_ld_cl(const WingAero& w);

}  // namespace evtol
