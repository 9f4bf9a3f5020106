#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "evtol/errors.hpp"
#include "evtol/fom.hpp"

using namespace evtol;

TEST_CASE("min-max rating maps the pool onto [1, 10]") {
  const std::vector<double> values{4.0, 1.0, 7.0};
  const std::vector<double> r = rate_values(values);
  CHECK(r[1] == doctest::Approx(10.0).epsilon(1e-12));  // pool minimum is best
  CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-12));   // pool maximum is worst
  CHECK(r[0] == doctest::Approx(5.5).epsilon(1e-12));   // midpoint lands mid-scale

  // Ratings are invariant under positive affine transforms of the values.
  const std::vector<double> shifted{4.0 * 3.0 + 2.0, 1.0 * 3.0 + 2.0,
                                    7.0 * 3.0 + 2.0};
  const std::vector<double> rs = rate_values(shifted);
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(rs[i] == doctest::Approx(r[i]).epsilon(1e-12));
  }
}

TEST_CASE("degenerate pools rate everything at the top") {
  const std::vector<double> r = rate_values({3.0, 3.0, 3.0});
  for (double v : r) CHECK(v == 10.0);
  CHECK(rate_values({}).empty());
}

TEST_CASE("trip values apply circuity to every metric") {
  TransportMode m;
  m.name = "tram";
  m.speed_kmh = 40.0;
  m.cost_per_skm = 0.12;
  m.co2_per_skm = 0.02;
  m.circuity = 1.5;
  const TripValues v = mode_trip_values(m, 70.0);
  CHECK(v.cost_eur == doctest::Approx(70.0 * 1.5 * 0.12).epsilon(1e-12));
  CHECK(v.co2_kg == doctest::Approx(70.0 * 1.5 * 0.02).epsilon(1e-12));
  CHECK(v.time_h == doctest::Approx(70.0 * 1.5 / 40.0).epsilon(1e-12));
  CHECK_THROWS_AS(mode_trip_values(m, 0.0), ModelError);
}

TEST_CASE("mode labels carry the occupancy") {
  TransportMode m;
  m.name = "electric_car";
  m.load_factor = 0.26;
  CHECK(m.label() == "electric_car (26%)");
  m.load_factor = 1.0;
  CHECK(m.label() == "electric_car (100%)");
  m.load_factor = 0.796;
  CHECK(m.label() == "electric_car (79.6%)");
}

TEST_CASE("baseline comparison table at the standard trip") {
  const FomTable t = build_fom_table(baseline_modes(), 70.0,
                                     {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  REQUIRE(t.rows.size() == baseline_modes().size());
  // Ranks are consecutive and sorted by falling aggregate score.
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].rank == int(i) + 1);
    if (i > 0) CHECK(t.rows[i - 1].fom >= t.rows[i].fom);
  }
  // The bicycle is the pool's cost and CO2 optimum and its time maximum, so
  // its score is exactly (10 + 10 + 1) / 3 at any distance.
  const FomRow* bike = t.find("bicycle (100%)");
  REQUIRE(bike != nullptr);
  CHECK(bike->fom == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(bike->r_cost == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(bike->r_co2 == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(bike->r_time == doctest::Approx(1.0).epsilon(1e-12));

  // Spot values for the strongest conventional contenders.
  const FomRow* ev = t.find("electric_car (100%)");
  REQUIRE(ev != nullptr);
  CHECK(ev->rank == 1);
  CHECK(ev->fom == doctest::Approx(8.044849).epsilon(1e-5));
  const FomRow* train = t.find("public_train (50%)");
  REQUIRE(train != nullptr);
  CHECK(train->fom == doctest::Approx(7.139395).epsilon(1e-5));
  const FomRow* plane = t.find("airplane (79.6%)");
  REQUIRE(plane != nullptr);
  CHECK(plane->fom == doctest::Approx(3.889144).epsilon(1e-5));

  // Every aggregate is the weighted rating sum.
  for (const FomRow& row : t.rows) {
    CHECK(row.fom ==
          doctest::Approx((row.r_cost + row.r_co2 + row.r_time) / 3.0)
              .epsilon(1e-12));
  }
}

TEST_CASE("weights steer the aggregate") {
  const FomTable t = build_fom_table(baseline_modes(), 70.0, {1.0, 0.0, 0.0});
  for (const FomRow& row : t.rows) {
    CHECK(row.fom == doctest::Approx(row.r_cost).epsilon(1e-12));
  }
}

TEST_CASE("aircraft entries join the pool and the rating") {
  PoolEntry craft;
  craft.label = "aircraft";
  craft.cost_eur = 25.0;
  craft.co2_kg = 8.0;
  craft.time_h = 0.45;
  const FomTable t = build_fom_table(baseline_modes(), 70.0,
                                     {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                                     {craft});
  REQUIRE(t.rows.size() == baseline_modes().size() + 1);
  const FomRow* row = t.find("aircraft");
  REQUIRE(row != nullptr);
  CHECK(row->is_aircraft);
  CHECK(row->cost_eur == 25.0);
  // Fast and expensive: best time rating in the pool, poor cost rating.
  CHECK(row->r_time == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(row->r_cost < 5.0);
}

TEST_CASE("modes CSV round trip matches the embedded pool") {
  const std::vector<TransportMode> loaded =
      load_modes_csv(EVTOL_REPO_DATA_DIR "/transport_modes.csv");
  const std::vector<TransportMode>& builtin = baseline_modes();
  REQUIRE(loaded.size() == builtin.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].label() == builtin[i].label());
    CHECK(loaded[i].speed_kmh == doctest::Approx(builtin[i].speed_kmh));
    CHECK(loaded[i].cost_per_skm == doctest::Approx(builtin[i].cost_per_skm));
    CHECK(loaded[i].co2_per_skm == doctest::Approx(builtin[i].co2_per_skm));
    CHECK(loaded[i].circuity == doctest::Approx(builtin[i].circuity));
  }
}

TEST_CASE("modes CSV loader rejects malformed input") {
  CHECK_THROWS_AS(load_modes_csv("/nonexistent/modes.csv"), ScenarioError);

  const std::string path = "/tmp/evtol_test_modes.csv";
  {
    std::ofstream out(path);
    out << "name,load_factor,speed_kmh,cost_per_skm,co2_per_skm,circuity\n";
    out << "tram,1.0,40.0,0.12\n";  // short row
  }
  CHECK_THROWS_WITH_AS(load_modes_csv(path), doctest::Contains("line 2"),
                       ScenarioError);
  {
    std::ofstream out(path);
    out << "name,load_factor,speed_kmh,cost_per_skm,co2_per_skm,circuity\n";
    out << "tram,1.0,forty,0.12,0.02,1.5\n";
  }
  CHECK_THROWS_WITH_AS(load_modes_csv(path), doctest::Contains("non-numeric"),
                       ScenarioError);
  {
    std::ofstream out(path);
    out << "name,load_factor,speed_kmh,cost_per_skm,co2_per_skm,circuity\n";
    out << "# only comments\n";
  }
  CHECK_THROWS_WITH_AS(load_modes_csv(path), doctest::Contains("no data"),
                       ScenarioError);
  std::remove(path.c_str());
}
