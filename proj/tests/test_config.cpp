#include <doctest.h>

#include <stdexcept>
#include <string>

#include "vavsim/config.hpp"
#include "vavsim/units.hpp"

using namespace vavsim;

#ifndef VAVSIM_CONFIG_DIR
#error "VAVSIM_CONFIG_DIR must point at the shipped building descriptions"
#endif

namespace {

const std::string kConfigDir = VAVSIM_CONFIG_DIR;

std::string minimal_json() {
  return R"({
    "name": "tiny",
    "air": {"density": 1.2, "specific_heat": 1000.0},
    "zones": [
      {"id": 1, "floor_area": 30.0, "height": 3.0,
       "window_area": 2.0, "window_absorptance": 0.4},
      {"id": 2, "floor_area": 30.0, "height": 3.0,
       "window_area": 2.0, "window_absorptance": 0.4}
    ],
    "couplings": [
      {"zone_a": 1, "zone_b": 2, "kind": "convective",
       "surface_area": 10.0, "convective_coefficient": 8.0}
    ],
    "vav": [
      {"zone_id": 1},
      {"zone_id": 2}
    ]
  })";
}

}  // namespace

TEST_CASE("the shipped open-plan office parses and validates") {
  const BuildingConfig cfg =
      load_building_config(kConfigDir + "/office6_open.json");
  CHECK(cfg.name == "office6_open");
  REQUIRE(cfg.model.zones.size() == 6);
  REQUIRE(cfg.model.couplings.size() == 7);
  REQUIRE(cfg.vavs.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(cfg.vavs[i].zone_id == cfg.model.zones[i].id);
  }
  CHECK(cfg.bands_f.comfort_low == 71.0);
  CHECK(cfg.bands_f.comfort_high == 74.0);
  CHECK(cfg.bands_f.safe_low == 60.0);
  CHECK(cfg.bands_f.safe_high == 90.0);
  CHECK(cfg.bands.comfort_low ==
        doctest::Approx(fahrenheit_to_kelvin(71.0)).epsilon(1e-14));
  CHECK(cfg.bands.hysteresis == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(cfg.schedule.work_start_min == 480);
  CHECK(cfg.schedule.work_end_min == 1020);
  CHECK(cfg.schedule.workdays ==
        std::array<bool, 7>{true, true, true, true, true, false, false});
  for (const auto& c : cfg.model.couplings) {
    CHECK(c.kind == CouplingKind::Convective);
  }
  // The shipped plant must be big enough for its own building.
  CHECK(cfg.warnings.empty());
}

TEST_CASE("the shipped closed-plan office differs only in partitions") {
  const BuildingConfig open =
      load_building_config(kConfigDir + "/office6_open.json");
  const BuildingConfig closed =
      load_building_config(kConfigDir + "/office6_closed.json");
  REQUIRE(closed.model.zones.size() == open.model.zones.size());
  for (std::size_t i = 0; i < open.model.zones.size(); ++i) {
    CHECK(closed.model.zones[i].floor_area == open.model.zones[i].floor_area);
    CHECK(closed.model.zones[i].window_area == open.model.zones[i].window_area);
  }
  REQUIRE(closed.model.couplings.size() == open.model.couplings.size());
  double g_open = 0.0;
  double g_closed = 0.0;
  for (std::size_t i = 0; i < open.model.couplings.size(); ++i) {
    CHECK(closed.model.couplings[i].kind == CouplingKind::Conductive);
    CHECK(closed.model.couplings[i].surface_area ==
          open.model.couplings[i].surface_area);
    g_open += open.model.couplings[i].conductance();
    g_closed += closed.model.couplings[i].conductance();
  }
  // Closing the partitions must materially cut zone-to-zone transfer.
  CHECK(g_closed < 0.5 * g_open);
  CHECK(closed.warnings.empty());
}

TEST_CASE("a minimal description fills in the documented defaults") {
  const BuildingConfig cfg = parse_building_config(minimal_json(), "inline");
  REQUIRE(cfg.model.zones.size() == 2);
  const ZoneSpec& z = cfg.model.zones[0];
  CHECK(z.thermal_mass_multiplier == 5.0);
  CHECK(z.internal_gain_occupied == doctest::Approx(10.0 * 30.0));
  CHECK(z.internal_gain_vacant == doctest::Approx(1.0 * 30.0));
  const VavSpec& v = cfg.vavs[0];
  CHECK(v.mass_flow_on == 0.5);
  CHECK(v.supply_temp_heat ==
        doctest::Approx(fahrenheit_to_kelvin(104.0)).epsilon(1e-14));
  CHECK(v.supply_temp_cool ==
        doctest::Approx(fahrenheit_to_kelvin(55.0)).epsilon(1e-14));
  CHECK(v.cop_heat == 3.0);
  CHECK(v.cop_cool == 3.5);
  CHECK(v.fan_power == 200.0);
  CHECK(cfg.bands_f.comfort_low == 71.0);
  CHECK(cfg.bands.hysteresis == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(cfg.schedule.work_start_min == 480);
  CHECK(cfg.schedule.work_end_min == 1020);
}

TEST_CASE("malformed descriptions fail with a pointer at the problem") {
  SUBCASE("not json at all") {
    CHECK_THROWS_AS(parse_building_config("{oops", "inline"),
                    std::runtime_error);
  }
  SUBCASE("missing zones") {
    CHECK_THROWS_WITH_AS(
        parse_building_config(R"({"name": "x"})", "inline"),
        doctest::Contains("zones"), std::runtime_error);
  }
  SUBCASE("unknown coupling kind") {
    std::string j = minimal_json();
    j.replace(j.find("convective"), 10, "telepathic");
    CHECK_THROWS_WITH_AS(parse_building_config(j, "inline"),
                         doctest::Contains("kind"), std::runtime_error);
  }
  SUBCASE("duplicate zone id") {
    std::string j = minimal_json();
    j.replace(j.find("\"id\": 2"), 7, "\"id\": 1");
    CHECK_THROWS_AS(parse_building_config(j, "inline"), std::runtime_error);
  }
  SUBCASE("vav pointing at a missing zone") {
    std::string j = minimal_json();
    j.replace(j.find("\"zone_id\": 2"), 12, "\"zone_id\": 9");
    CHECK_THROWS_AS(parse_building_config(j, "inline"), std::runtime_error);
  }
  SUBCASE("negative area") {
    std::string j = minimal_json();
    j.replace(j.find("\"floor_area\": 30.0"), 18, "\"floor_area\": -1.0");
    CHECK_THROWS_AS(parse_building_config(j, "inline"), std::runtime_error);
  }
}

TEST_CASE("schedule clock strings are strict") {
  std::string j = minimal_json();
  j.insert(j.rfind('}'),
           R"_(, "schedule": {"work_start": "07:30", "work_end": "18:15"})_");
  const BuildingConfig cfg = parse_building_config(j, "inline");
  CHECK(cfg.schedule.work_start_min == 450);
  CHECK(cfg.schedule.work_end_min == 1095);

  std::string bad = minimal_json();
  bad.insert(bad.rfind('}'),
             R"_(, "schedule": {"work_start": "25:00", "work_end": "18:00"})_");
  CHECK_THROWS_AS(parse_building_config(bad, "inline"), std::runtime_error);

  std::string bad2 = minimal_json();
  bad2.insert(bad2.rfind('}'),
              R"_(, "schedule": {"work_start": "eight", "work_end": "18:00"})_");
  CHECK_THROWS_AS(parse_building_config(bad2, "inline"), std::runtime_error);
}

TEST_CASE("unknown weekday names are rejected") {
  std::string j = minimal_json();
  j.insert(j.rfind('}'),
           R"_(, "schedule": {"work_start": "08:00", "work_end": "17:00",
                "workdays": ["Mon", "Funday"]})_");
  CHECK_THROWS_WITH_AS(parse_building_config(j, "inline"),
                       doctest::Contains("Funday"), std::runtime_error);
}
