#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vavsim/thermal.hpp"
#include "vavsim/units.hpp"

using namespace vavsim;

namespace {

Coupling wall(double k, double d, double area) {
  Coupling c;
  c.zone_a = 1;
  c.zone_b = 2;
  c.kind = CouplingKind::Conductive;
  c.conductivity = k;
  c.thickness = d;
  c.surface_area = area;
  return c;
}

Coupling opening(double h, double area) {
  Coupling c;
  c.zone_a = 1;
  c.zone_b = 2;
  c.kind = CouplingKind::Convective;
  c.convective_coefficient = h;
  c.surface_area = area;
  return c;
}

ZoneSpec plain_zone(int id) {
  ZoneSpec z;
  z.id = id;
  z.floor_area = 20.0;
  z.height = 2.5;
  z.window_area = 0.0;
  z.window_absorptance = 0.0;
  z.internal_gain_occupied = 0.0;
  z.internal_gain_vacant = 0.0;
  return z;
}

BuildingModel two_zone_model(const Coupling& c) {
  BuildingModel m;
  m.zones = {plain_zone(1), plain_zone(2)};
  m.couplings = {c};
  return m;
}

const WeatherSample kMildNight{0.0, 290.0, 290.0};

}  // namespace

TEST_CASE("conduction flux through a partition") {
  // 0.25 / 0.1 * 4 * 10 = 100 W, flowing into the cooler side.
  const Coupling c = wall(0.25, 0.1, 4.0);
  CHECK(conduction_flux(c, 290.0, 300.0) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(conduction_flux(c, 300.0, 290.0) == doctest::Approx(-100.0).epsilon(1e-12));
  CHECK(conduction_flux(c, 295.0, 295.0) == 0.0);
}

TEST_CASE("convection flux through an opening") {
  // 3 * 4 * 10 = 120 W.
  const Coupling c = opening(3.0, 4.0);
  CHECK(convection_flux(c, 290.0, 300.0) == doctest::Approx(120.0).epsilon(1e-12));
  CHECK(convection_flux(c, 300.0, 290.0) == doctest::Approx(-120.0).epsilon(1e-12));
}

TEST_CASE("coupling flux dispatches on the coupling kind") {
  CHECK(coupling_flux(wall(0.25, 0.1, 4.0), 290.0, 300.0) ==
        doctest::Approx(100.0));
  CHECK(coupling_flux(opening(3.0, 4.0), 290.0, 300.0) ==
        doctest::Approx(120.0));
}

TEST_CASE("window radiation exchange") {
  ZoneSpec z = plain_zone(1);
  z.window_area = 2.0;
  z.window_absorptance = 0.5;
  // sigma * 0.5 * 2 * (300^4 - 295^4), hand-computed.
  CHECK(solar_gain(z, 295.0, 300.0) ==
        doctest::Approx(29.862991437823382).epsilon(1e-15));
  CHECK(solar_gain(z, 300.0, 300.0) == 0.0);
  CHECK(solar_gain(z, 305.0, 300.0) < 0.0);
}

TEST_CASE("supply air heat delivery") {
  // 0.5 * 1005 * 20 = 10050 W.
  CHECK(hvac_gain(0.5, 1005.0, 305.0, 285.0) ==
        doctest::Approx(10050.0).epsilon(1e-12));
  CHECK(hvac_gain(0.5, 1005.0, 285.0, 305.0) ==
        doctest::Approx(-10050.0).epsilon(1e-12));
  CHECK(hvac_gain(0.0, 1005.0, 305.0, 285.0) == 0.0);
}

TEST_CASE("zone heat capacity scales with the mass multiplier") {
  BuildingModel m = two_zone_model(opening(1.0, 1.0));
  ZoneSpec& z = m.zones[0];
  z.thermal_mass_multiplier = 5.0;
  const double base = 1.204 * (20.0 * 2.5) * 1005.0;
  CHECK(zone_heat_capacity(m, z) == doctest::Approx(5.0 * base).epsilon(1e-12));
  z.thermal_mass_multiplier = 1.0;
  CHECK(zone_heat_capacity(m, z) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("an isolated pair conserves energy while equilibrating") {
  BuildingModel m = two_zone_model(opening(10.0, 5.0));
  ThermalState s;
  s.zone_temps_k = {300.0, 290.0};
  const std::vector<ZoneFlow> off(2);
  const double c0 = zone_heat_capacity(m, m.zones[0]);
  const double c1 = zone_heat_capacity(m, m.zones[1]);
  const double e0 = c0 * s.zone_temps_k[0] + c1 * s.zone_temps_k[1];

  double gap = 10.0;
  for (int i = 0; i < 500; ++i) {
    s = step(m, s, kMildNight, off, false, 60.0);
    const double e = c0 * s.zone_temps_k[0] + c1 * s.zone_temps_k[1];
    CHECK(e == doctest::Approx(e0).epsilon(1e-12));
    const double g = s.zone_temps_k[0] - s.zone_temps_k[1];
    // Relaxation is monotone: the gap shrinks and never flips sign.
    CHECK(g >= 0.0);
    CHECK(g <= gap + 1e-15);
    gap = g;
  }
  CHECK(gap < 0.2);
}

TEST_CASE("swapping the coupling endpoints changes nothing") {
  BuildingModel m1 = two_zone_model(opening(10.0, 5.0));
  BuildingModel m2 = m1;
  std::swap(m2.couplings[0].zone_a, m2.couplings[0].zone_b);
  ThermalState s;
  s.zone_temps_k = {300.0, 290.0};
  const std::vector<ZoneFlow> off(2);
  ThermalState a = step(m1, s, kMildNight, off, false, 120.0);
  ThermalState b = step(m2, s, kMildNight, off, false, 120.0);
  CHECK(a.zone_temps_k[0] == b.zone_temps_k[0]);
  CHECK(a.zone_temps_k[1] == b.zone_temps_k[1]);
}

TEST_CASE("a wall and an opening with equal conductance behave identically") {
  // k / d = 2.5 matches h = 2.5 over the same area.
  BuildingModel m1 = two_zone_model(wall(0.25, 0.1, 8.0));
  BuildingModel m2 = two_zone_model(opening(2.5, 8.0));
  CHECK(m1.couplings[0].conductance() == m2.couplings[0].conductance());
  ThermalState s;
  s.zone_temps_k = {301.0, 288.0};
  const std::vector<ZoneFlow> off(2);
  for (int i = 0; i < 50; ++i) {
    ThermalState a = step(m1, s, kMildNight, off, false, 300.0);
    ThermalState b = step(m2, s, kMildNight, off, false, 300.0);
    CHECK(a.zone_temps_k[0] == b.zone_temps_k[0]);
    CHECK(a.zone_temps_k[1] == b.zone_temps_k[1]);
    s = a;
  }
}

TEST_CASE("occupancy switches the internal gain level") {
  BuildingModel m = two_zone_model(opening(10.0, 5.0));
  m.zones[0].internal_gain_occupied = 500.0;
  m.zones[0].internal_gain_vacant = 50.0;
  ThermalState s;
  s.zone_temps_k = {295.0, 295.0};
  const std::vector<ZoneFlow> off(2);
  const double dt = 300.0;
  ThermalState occ = step(m, s, kMildNight, off, true, dt);
  ThermalState vac = step(m, s, kMildNight, off, false, dt);
  const double c0 = zone_heat_capacity(m, m.zones[0]);
  CHECK(occ.zone_temps_k[0] - vac.zone_temps_k[0] ==
        doctest::Approx(450.0 * dt / c0).epsilon(1e-12));
}

TEST_CASE("the stability guard rejects oversized steps") {
  BuildingModel m = two_zone_model(opening(10.0, 5.0));
  m.zones[0].thermal_mass_multiplier = 1.0;
  m.zones[1].thermal_mass_multiplier = 1.0;
  const std::vector<double> flows(2, 0.0);
  const double cap = zone_heat_capacity(m, m.zones[0]);
  const double g = m.couplings[0].conductance();
  const double dt_limit = 0.5 * cap / g;
  CHECK_NOTHROW(check_step_stability(m, flows, dt_limit * 0.99));
  CHECK_THROWS_WITH_AS(check_step_stability(m, flows, dt_limit * 1.01),
                       doctest::Contains("unstable"), std::runtime_error);
  // Supply air flow tightens the limit.
  const std::vector<double> strong(2, 5.0);
  CHECK_THROWS_AS(check_step_stability(m, strong, dt_limit * 0.99),
                  std::runtime_error);
  CHECK_THROWS_AS(check_step_stability(m, flows, -1.0), std::runtime_error);
}

TEST_CASE("a diverging integration reports the zone and time") {
  BuildingModel m = two_zone_model(opening(10.0, 5.0));
  ThermalState s;
  s.zone_temps_k = {300.0, 290.0};
  s.clock_min = 36.0;
  const std::vector<ZoneFlow> off(2);
  CHECK_THROWS_WITH_AS(step(m, s, kMildNight, off, false, 1e308),
                       doctest::Contains("zone 1"), std::runtime_error);
  try {
    step(m, s, kMildNight, off, false, 1e308);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("36") != std::string::npos);
  }
}

TEST_CASE("step rejects mismatched state or flow arity") {
  BuildingModel m = two_zone_model(opening(10.0, 5.0));
  ThermalState s;
  s.zone_temps_k = {300.0};
  const std::vector<ZoneFlow> off(2);
  CHECK_THROWS_AS(step(m, s, kMildNight, off, false, 60.0), std::runtime_error);
  s.zone_temps_k = {300.0, 290.0};
  const std::vector<ZoneFlow> one(1);
  CHECK_THROWS_AS(step(m, s, kMildNight, one, false, 60.0), std::runtime_error);
}

TEST_CASE("steady state balance closes at the analytic fixed point") {
  // One conditioned zone against a pinned neighbor: the temperature where
  // supply heat balances the partition loss is
  // (mdot cp Th + G Tb) / (mdot cp + G), hand-evaluated below.
  BuildingModel m = two_zone_model(wall(0.25, 0.1, 36.0));  // G = 90 W/K
  ThermalState s;
  s.zone_temps_k = {303.87164948453608, 283.15};
  std::vector<ZoneFlow> hvac(2);
  hvac[0] = {0.2, 313.15};  // mdot cp = 201 W/K
  const std::vector<double> r = steady_state_residual(m, s, hvac);
  CHECK(r[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  // The pinned neighbor is not in balance; it absorbs the partition flux.
  CHECK(r[1] == doctest::Approx(90.0 * (303.87164948453608 - 283.15)).epsilon(1e-9));
  // Away from the fixed point the residual is strictly positive.
  s.zone_temps_k[0] = 300.0;
  CHECK(steady_state_residual(m, s, hvac)[0] > 100.0);
}
