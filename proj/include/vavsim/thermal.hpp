#pragma once

#include <span>
#include <vector>

#include "vavsim/building.hpp"

namespace vavsim {

// Supply air delivered to one zone over a step. mass_flow == 0 means the
// terminal is idle and supply_temp is ignored.
struct ZoneFlow {
  double mass_flow = 0.0;    // kg/s
  double supply_temp = 0.0;  // K
};

// All fluxes are W into zone_a (into the zone for solar/hvac); the flux into
// zone_b is the negation.
double conduction_flux(const Coupling& c, double t_a, double t_b);
double convection_flux(const Coupling& c, double t_a, double t_b);
double coupling_flux(const Coupling& c, double t_a, double t_b);
double solar_gain(const ZoneSpec& zone, double t_zone, double t_sol);
double hvac_gain(double mass_flow, double specific_heat, double t_supply,
                 double t_zone);

double zone_heat_capacity(const BuildingModel& model, const ZoneSpec& zone);

// Forward-Euler guard: rejects dt where any zone's coupling + supply-air
// conductance exceeds half its capacity per step.
void check_step_stability(const BuildingModel& model,
                          std::span<const double> hvac_mass_flows, double dt_s);

// One explicit Euler step of length dt_s. hvac is ordered like model.zones.
ThermalState step(const BuildingModel& model, const ThermalState& state,
                  const WeatherSample& weather, std::span<const ZoneFlow> hvac,
                  bool occupied, double dt_s);

// Per-zone |net HVAC + inter-zone flux|, W. Solar and internal gains are
// excluded: this measures how far the controlled balance is from rest.
std::vector<double> steady_state_residual(const BuildingModel& model,
                                          const ThermalState& state,
                                          std::span<const ZoneFlow> hvac);

}  // namespace vavsim
