#include "doctest.h"

#include <cmath>
#include <numbers>

#include "evtol/aero.hpp"
#include "evtol/errors.hpp"

using namespace evtol;

namespace {

WingAero default_wing(double span = 10.0, double chord = 1.5) {
  return make_wing(span, chord, ScenarioConfig{}.aero);
}

}  // namespace

TEST_CASE("make_wing derives planform quantities") {
  const WingAero w = default_wing();
  CHECK(w.area_m2 == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(w.aspect_ratio == doctest::Approx(10.0 / 1.5).epsilon(1e-12));
  CHECK_THROWS_AS(make_wing(10.0, 0.0, ScenarioConfig{}.aero), ModelError);
}

TEST_CASE("finite-wing correction reduces the 2D slope") {
  const WingAero w = default_wing();
  const double expected =
      w.lift_slope /
      (1.0 + w.lift_slope / (std::numbers::pi * w.aspect_ratio * w.oswald_e));
  CHECK(wing_lift_slope(w) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(wing_lift_slope(w) < w.lift_slope);
}

TEST_CASE("lift curve is linear and guards its validity range") {
  const WingAero w = default_wing();
  const double a = wing_lift_slope(w);
  const double alpha = 4.0 * std::numbers::pi / 180.0;
  CHECK(lift_coefficient(w, alpha) ==
        doctest::Approx(w.cl0 + a * alpha).epsilon(1e-12));
  CHECK(lift_coefficient(w, 0.0) == doctest::Approx(w.cl0).epsilon(1e-12));
  const double past_stall = 12.5 * std::numbers::pi / 180.0;
  CHECK_THROWS_AS(lift_coefficient(w, past_stall), ModelError);
  try {
    lift_coefficient(w, past_stall);
  } catch (const ModelError& e) {
    CHECK(e.code() == ModelErrorCode::kAlphaOutOfRange);
  }
}

TEST_CASE("parabolic polar identity") {
  const WingAero w = default_wing();
  const double cl = 0.9;
  const double induced =
      cl * cl / (std::numbers::pi * w.aspect_ratio * w.oswald_e);
  CHECK(drag_coefficient(w, cl) ==
        doctest::Approx(w.cd_min + induced).epsilon(1e-12));
  CHECK(lift_to_drag(w, cl) ==
        doctest::Approx(cl / (w.cd_min + induced)).epsilon(1e-12));
}

TEST_CASE("best L/D sits at the analytic optimum CL") {
  const WingAero w = default_wing();
  const double cl_star = best_ld_cl(w);
  CHECK(cl_star ==
        doctest::Approx(std::sqrt(w.cd_min * std::numbers::pi *
                                  w.aspect_ratio * w.oswald_e))
            .epsilon(1e-12));
  // At the optimum the parabolic polar gives L/D = CL*/(2 cd_min).
  CHECK(lift_to_drag(w, cl_star) ==
        doctest::Approx(cl_star / (2.0 * w.cd_min)).epsilon(1e-12));
  // Nearby CLs do strictly worse.
  const double best = lift_to_drag(w, cl_star);
  CHECK(lift_to_drag(w, cl_star * 1.02) < best);
  CHECK(lift_to_drag(w, cl_star * 0.98) < best);
  // Numerical scan agrees with the closed form to within grid resolution.
  double scan_best_cl = 0.0;
  double scan_best = 0.0;
  for (double cl = 0.2; cl <= 2.0; cl += 1e-4) {
    const double ld = lift_to_drag(w, cl);
    if (ld > scan_best) {
      scan_best = ld;
      scan_best_cl = cl;
    }
  }
  CHECK(scan_best_cl == doctest::Approx(cl_star).epsilon(2e-4));
}

TEST_CASE("dynamic-pressure force") {
  const WingAero w = default_wing();
  const double rho = 1.0879053457271046;
  const double v = 50.0;
  const double cl = 0.8;
  CHECK(aero_force_n(w, rho, v, cl) ==
        doctest::Approx(0.5 * rho * v * v * w.area_m2 * cl).epsilon(1e-12));
}
