#include "doctest.h"

#include <array>
#include <cmath>
#include <string>

#include "evtol/errors.hpp"
#include "evtol/scenario.hpp"

using namespace evtol;

TEST_CASE("default scenario passes validation") {
  ScenarioConfig cfg;
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("scenario json round trip is exact") {
  ScenarioConfig cfg;
  cfg.mission.trip_distance_m = 91234.5;
  cfg.econ.fare_per_km = 4.75;
  cfg.fom.weights = {0.5, 0.25, 0.25};
  cfg.acoustics.apply_a_weighting = true;

  const ScenarioConfig back = scenario_from_json_text(scenario_to_json_text(cfg));
  CHECK(back.mission.trip_distance_m == cfg.mission.trip_distance_m);
  CHECK(back.econ.fare_per_km == cfg.econ.fare_per_km);
  CHECK(back.fom.weights[0] == cfg.fom.weights[0]);
  CHECK(back.acoustics.apply_a_weighting == cfg.acoustics.apply_a_weighting);
  CHECK(scenario_fingerprint(back) == scenario_fingerprint(cfg));
}

TEST_CASE("partial scenario json merges over defaults") {
  const ScenarioConfig cfg =
      scenario_from_json_text(R"({"economics": {"fare_per_km": 4.0}})");
  const ScenarioConfig defaults;
  CHECK(cfg.econ.fare_per_km == 4.0);
  CHECK(cfg.mission.trip_distance_m == defaults.mission.trip_distance_m);
  CHECK(cfg.econ.electricity_price_kwh == defaults.econ.electricity_price_kwh);
}

TEST_CASE("unknown scenario fields are rejected by name") {
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"mission": {"cruise_mach": 0.3}})"),
      doctest::Contains("cruise_mach"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json_text(R"({"missionn": {}})"),
                  ScenarioError);
}

TEST_CASE("invariant violations name the offending field") {
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"operations": {"load_factor": 1.4}})"),
      doctest::Contains("load_factor"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"fom": {"weights": [0.5, 0.5, 0.5]}})"),
      doctest::Contains("weights"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"bounds": {"span_m": {"lo": 9.0, "hi": 6.0}}})"),
      doctest::Contains("span_m"), ScenarioError);
}

TEST_CASE("fingerprint is stable and sensitive") {
  ScenarioConfig cfg;
  const std::string fp = scenario_fingerprint(cfg);
  CHECK(fp.size() == 16);
  CHECK(fp == scenario_fingerprint(cfg));

  ScenarioConfig other = cfg;
  other.econ.fare_per_km += 1e-9;
  CHECK(fp != scenario_fingerprint(other));
}

TEST_CASE("design json round trip and unknown-field rejection") {
  DesignVector d{11.2, 1.3, 1.8, 1.1, 350.0, 2.5};
  const DesignVector back = design_from_json_text(design_to_json_text(d));
  for (int i = 0; i < DesignVector::kSize; ++i) {
    CHECK(back.as_array()[i] == d.as_array()[i]);
  }
  CHECK_THROWS_WITH_AS(design_from_json_text(R"({"span_m": 10.0, "wingspan": 1.0})"),
                       doctest::Contains("wingspan"), ScenarioError);
}

TEST_CASE("repo design files load") {
  const DesignVector d = load_design(EVTOL_REPO_DATA_DIR "/designs/toc.json");
  CHECK(d.span_m == doctest::Approx(9.8));
  CHECK(first_bounds_violation(d, ScenarioConfig{}.bounds) == nullptr);
}

TEST_CASE("bounds violations are reported by variable name") {
  const ScenarioConfig cfg;
  DesignVector d;
  CHECK(first_bounds_violation(d, cfg.bounds) == nullptr);
  d.rho_battery_wh_kg = 450.0;
  const char* name = first_bounds_violation(d, cfg.bounds);
  REQUIRE(name != nullptr);
  CHECK(std::string(name) == "rho_battery_wh_kg");
}

TEST_CASE("normalize and denormalize are inverse maps") {
  const ScenarioConfig cfg;
  const DesignVector d{12.0, 2.0, 0.7, 1.9, 210.0, 3.3};
  const auto z = normalize_design(d, cfg.bounds);
  for (double zi : z) {
    CHECK(zi >= 0.0);
    CHECK(zi <= 1.0);
  }
  const DesignVector back = denormalize_design(z, cfg.bounds);
  for (int i = 0; i < DesignVector::kSize; ++i) {
    CHECK(back.as_array()[i] == doctest::Approx(d.as_array()[i]).epsilon(1e-12));
  }
  // Corners map to the exact bound values.
  const DesignVector lo = denormalize_design({0, 0, 0, 0, 0, 0}, cfg.bounds);
  CHECK(lo.span_m == cfg.bounds.span_m.lo);
  const DesignVector hi = denormalize_design({1, 1, 1, 1, 1, 1}, cfg.bounds);
  CHECK(hi.c_charge_per_h == cfg.bounds.c_charge_per_h.hi);
}
