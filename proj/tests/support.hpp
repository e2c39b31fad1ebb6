#pragma once

// Shared fixtures: a small six-zone building and canned weather for harness
// tests. Kept light so unit tests stay fast.

#include <cmath>
#include <string>
#include <vector>

#include "vavsim/config.hpp"
#include "vavsim/harness.hpp"
#include "vavsim/units.hpp"
#include "vavsim/weather.hpp"

namespace vavsim::testing {

inline BuildingConfig make_test_building() {
  BuildingConfig cfg;
  cfg.name = "test6";
  cfg.model.air_density = 1.204;
  cfg.model.air_specific_heat = 1005.0;
  for (int id = 1; id <= 6; ++id) {
    ZoneSpec z;
    z.id = id;
    z.floor_area = 50.0;
    z.height = 3.0;
    z.window_area = 2.0;
    z.window_absorptance = 0.3;
    z.thermal_mass_multiplier = 8.0;
    z.internal_gain_occupied = 200.0;
    z.internal_gain_vacant = 50.0;
    cfg.model.zones.push_back(z);
  }
  for (int a = 1; a <= 5; ++a) {
    Coupling c;
    c.zone_a = a;
    c.zone_b = a + 1;
    c.kind = CouplingKind::Convective;
    c.surface_area = 20.0;
    c.convective_coefficient = 10.0;
    cfg.model.couplings.push_back(c);
  }
  for (int id = 1; id <= 6; ++id) {
    VavSpec v;
    v.zone_id = id;
    v.mass_flow_on = 0.4;
    cfg.vavs.push_back(v);
  }
  cfg.bands = default_bands();
  cfg.bands_f = default_bands_f();
  return cfg;
}

inline std::vector<WeatherSample> flat_weather(double outdoor_f, int days,
                                               int step_minutes) {
  std::vector<WeatherSample> w;
  const int n = days * 1440 / step_minutes;
  const double k = fahrenheit_to_kelvin(outdoor_f);
  for (int i = 0; i <= n; ++i) {
    WeatherSample s;
    s.minutes = static_cast<double>(i) * step_minutes;
    s.outdoor_k = k;
    s.solar_k = solar_temperature(k, std::fmod(s.minutes, 1440.0));
    w.push_back(s);
  }
  return w;
}

inline RunConfig make_test_run(int days, int step_minutes) {
  RunConfig cfg;
  cfg.building = make_test_building();
  cfg.weather = flat_weather(68.0, days, step_minutes);
  cfg.step_minutes = step_minutes;
  cfg.duration_days = days;
  return cfg;
}

}  // namespace vavsim::testing
