#include "doctest.h"

#include <cmath>
#include <string>

#include "evtol/errors.hpp"
#include "evtol/mass.hpp"

using namespace evtol;

namespace {

const DesignVector kTocDesign{9.8, 1.0, 0.92, 1.38, 400.0, 1.9};

}  // namespace

TEST_CASE("sizing payload scales per-seat masses") {
  ScenarioConfig cfg;
  CHECK(payload_mass(cfg) == doctest::Approx(392.8).epsilon(1e-12));
  cfg.ops.seats = 2;
  cfg.mass.sizing_load_factor = 0.5;
  CHECK(payload_mass(cfg) == doctest::Approx(98.2).epsilon(1e-12));
}

TEST_CASE("battery mass holds the usable energy at rated density") {
  // A pack flying 234.7 kWh of rated capacity at 290 Wh/kg weighs 809 kg;
  // the same usable energy at 400 Wh/kg collapses to a 405 kg pack.
  const double usable_a = 234.7 * 0.64;
  CHECK(battery_mass(usable_a - 50.0, 50.0, 290.0, 0.64) ==
        doctest::Approx(234.7 * 1000.0 / 290.0).epsilon(1e-12));
  const double usable_b = 162.0 * 0.64;
  CHECK(battery_mass(usable_b - 30.0, 30.0, 400.0, 0.64) ==
        doctest::Approx(405.0).epsilon(1e-12));
  CHECK_THROWS_AS(battery_mass(100.0, 20.0, 0.0, 0.64), ModelError);
}

TEST_CASE("component regressions follow their power laws") {
  const ScenarioConfig cfg;
  const MassConfig& mc = cfg.mass;
  const DesignVector d{11.0, 1.4, 1.2, 1.5, 300.0, 2.0};
  const double mtom = 2000.0;
  const double p_lift = 500.0;
  const double p_push = 120.0;
  const EmptyMasses m = empty_mass(d, mtom, p_lift, p_push, cfg);

  const double area = 11.0 * 1.4;
  const double ar = 11.0 / 1.4;
  CHECK(m.wing_kg == doctest::Approx(mc.wing_coeff * std::pow(area, 0.758) *
                                     std::pow(ar, 0.6) *
                                     std::pow(3.8 * mtom, 0.49))
                         .epsilon(1e-12));
  CHECK(m.fuselage_kg ==
        doctest::Approx(60.0 * std::pow(mtom, 0.177)).epsilon(1e-12));
  CHECK(m.gear_kg == doctest::Approx(0.04 * mtom).epsilon(1e-12));
  CHECK(m.rotor_kg ==
        doctest::Approx(mc.rotor_coeff * (8.0 * std::pow(1.5, 2.2) +
                                          std::pow(1.2, 2.2)))
            .epsilon(1e-12));
  CHECK(m.motor_kg ==
        doctest::Approx(1.5 * (p_lift + p_push) / mc.motor_specific_power)
            .epsilon(1e-12));
  CHECK(m.systems_kg ==
        doctest::Approx(mc.systems_coeff * std::pow(mtom, 0.8)).epsilon(1e-12));
  CHECK(m.furnish_kg ==
        doctest::Approx(0.0582 * mtom - 29.48).epsilon(1e-12));
  CHECK(m.crew_kg == cfg.mass.crew_mass_kg);
  CHECK(m.total_kg ==
        doctest::Approx(m.wing_kg + m.fuselage_kg + m.gear_kg + m.rotor_kg +
                        m.motor_kg + m.systems_kg + m.furnish_kg + m.crew_kg)
            .epsilon(1e-12));
  CHECK_FALSE(m.outside_validity);
}

TEST_CASE("furnishing floors at zero and the validity band is flagged") {
  const ScenarioConfig cfg;
  const DesignVector d{11.0, 1.4, 1.2, 1.5, 300.0, 2.0};
  const EmptyMasses light = empty_mass(d, 400.0, 100.0, 30.0, cfg);
  CHECK(light.furnish_kg == 0.0);
  CHECK(light.outside_validity);
  const EmptyMasses heavy = empty_mass(d, 6000.0, 100.0, 30.0, cfg);
  CHECK(heavy.outside_validity);
}

TEST_CASE("MTOM fixed point closes the mass budget") {
  const ScenarioConfig cfg;
  const MassBreakdown m = solve_mtom(kTocDesign, cfg);
  CHECK(m.mtom_kg == m.payload_kg + m.empty_kg + m.battery_kg);
  CHECK(std::abs(m.residual_kg) <= cfg.mass.fixed_point_tol_kg);
  CHECK(m.iterations < cfg.mass.fixed_point_max_iter);
  CHECK(m.empty_fraction == doctest::Approx(m.empty_kg / m.mtom_kg));
  CHECK(m.battery_fraction == doctest::Approx(m.battery_kg / m.mtom_kg));
  CHECK(m.warnings.empty());
}

TEST_CASE("converged MTOM is independent of the initial guess") {
  const ScenarioConfig cfg;
  const double ref = solve_mtom(kTocDesign, cfg, 1500.0).mtom_kg;
  for (double guess : {500.0, 3000.0, 5700.0}) {
    CHECK(std::abs(solve_mtom(kTocDesign, cfg, guess).mtom_kg - ref) < 1e-4);
  }
}

TEST_CASE("out-of-bounds designs are rejected by variable name") {
  const ScenarioConfig cfg;
  DesignVector d = kTocDesign;
  d.span_m = 20.0;
  try {
    solve_mtom(d, cfg);
    FAIL("expected ModelError");
  } catch (const ModelError& e) {
    CHECK(e.code() == ModelErrorCode::kDesignOutOfBounds);
    CHECK(std::string(e.what()).find("span_m") != std::string::npos);
  }
}

TEST_CASE("a snowballing design reports divergence, not garbage") {
  // Small wing, heavy rotor set, poor cells: every added kilogram of pack
  // demands more than a kilogram of structure, so the loop cannot settle.
  const ScenarioConfig cfg;
  const DesignVector d{6.0, 1.0, 0.5, 2.0, 200.0, 1.0};
  try {
    solve_mtom(d, cfg);
    FAIL("expected ModelError");
  } catch (const ModelError& e) {
    CHECK(e.code() == ModelErrorCode::kMassDivergence);
  }
}
