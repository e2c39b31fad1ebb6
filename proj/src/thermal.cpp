#include "vavsim/thermal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vavsim/units.hpp"

namespace vavsim {

double conduction_flux(const Coupling& c, double t_a, double t_b) {
  // Q = (k / d) * A * (Tb - Ta)
  return c.conductivity / c.thickness * c.surface_area * (t_b - t_a);
}

double convection_flux(const Coupling& c, double t_a, double t_b) {
  // Q = h * A * (Tb - Ta)
  return c.convective_coefficient * c.surface_area * (t_b - t_a);
}

double coupling_flux(const Coupling& c, double t_a, double t_b) {
  return c.kind == CouplingKind::Conductive ? conduction_flux(c, t_a, t_b)
                                            : convection_flux(c, t_a, t_b);
}

double solar_gain(const ZoneSpec& zone, double t_zone, double t_sol) {
  // Q = sigma * alpha * A * (Tsol^4 - T^4)
  const double t4 = t_sol * t_sol * t_sol * t_sol - t_zone * t_zone * t_zone * t_zone;
  return kStefanBoltzmann * zone.window_absorptance * zone.window_area * t4;
}

double hvac_gain(double mass_flow, double specific_heat, double t_supply,
                 double t_zone) {
  // Q = mdot * cp * (Tsupply - T); supply air leaves at zone temperature.
  return mass_flow * specific_heat * (t_supply - t_zone);
}

double zone_heat_capacity(const BuildingModel& model, const ZoneSpec& zone) {
  return model.air_density * zone.volume() * model.air_specific_heat *
         zone.thermal_mass_multiplier;
}

void check_step_stability(const BuildingModel& model,
                          std::span<const double> hvac_mass_flows, double dt_s) {
  if (!(dt_s > 0.0))
    throw std::runtime_error("thermal: step length must be positive");
  const std::size_t n = model.zones.size();
  std::vector<double> conductance(n, 0.0);
  for (const auto& c : model.couplings) {
    const double g = c.conductance();
    conductance[model.zone_index(c.zone_a)] += g;
    conductance[model.zone_index(c.zone_b)] += g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i < hvac_mass_flows.size())
      conductance[i] += hvac_mass_flows[i] * model.air_specific_heat;
    const double cap = zone_heat_capacity(model, model.zones[i]);
    const double ratio = dt_s * conductance[i] / cap;
    if (ratio > 0.5)
      throw std::runtime_error(
          "thermal: explicit step unstable for zone " +
          std::to_string(model.zones[i].id) + " (dt*G/C = " +
          std::to_string(ratio) + " > 0.5); shorten the step or add mass");
  }
}

ThermalState step(const BuildingModel& model, const ThermalState& state,
                  const WeatherSample& weather, std::span<const ZoneFlow> hvac,
                  bool occupied, double dt_s) {
  const std::size_t n = model.zones.size();
  if (state.zone_temps_k.size() != n)
    throw std::runtime_error("thermal: state size does not match zone count");
  if (hvac.size() != n)
    throw std::runtime_error("thermal: hvac flow count does not match zone count");

  std::vector<double> net(n, 0.0);  // W into each zone
  for (const auto& c : model.couplings) {
    const int ia = model.zone_index(c.zone_a);
    const int ib = model.zone_index(c.zone_b);
    const double q = coupling_flux(c, state.zone_temps_k[ia], state.zone_temps_k[ib]);
    net[ia] += q;
    net[ib] -= q;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& z = model.zones[i];
    net[i] += solar_gain(z, state.zone_temps_k[i], weather.solar_k);
    net[i] += occupied ? z.internal_gain_occupied : z.internal_gain_vacant;
    net[i] += hvac_gain(hvac[i].mass_flow, model.air_specific_heat,
                        hvac[i].supply_temp, state.zone_temps_k[i]);
  }

  ThermalState next;
  next.zone_temps_k.resize(n);
  next.clock_min = state.clock_min + dt_s / 60.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cap = zone_heat_capacity(model, model.zones[i]);
    next.zone_temps_k[i] = state.zone_temps_k[i] + dt_s * net[i] / cap;
    if (!std::isfinite(next.zone_temps_k[i])) {
      throw std::runtime_error(
          "thermal: integration blew up in zone " +
          std::to_string(model.zones[i].id) + " at t = " +
          std::to_string(state.clock_min) + " min");
    }
  }
  return next;
}

std::vector<double> steady_state_residual(const BuildingModel& model,
                                          const ThermalState& state,
                                          std::span<const ZoneFlow> hvac) {
  const std::size_t n = model.zones.size();
  if (state.zone_temps_k.size() != n)
    throw std::runtime_error("thermal: state size does not match zone count");
  if (hvac.size() != n)
    throw std::runtime_error("thermal: hvac flow count does not match zone count");
  std::vector<double> residual(n, 0.0);
  for (const auto& c : model.couplings) {
    const int ia = model.zone_index(c.zone_a);
    const int ib = model.zone_index(c.zone_b);
    const double q = coupling_flux(c, state.zone_temps_k[ia], state.zone_temps_k[ib]);
    residual[ia] += q;
    residual[ib] -= q;
  }
  for (std::size_t i = 0; i < n; ++i) {
    residual[i] += hvac_gain(hvac[i].mass_flow, model.air_specific_heat,
                             hvac[i].supply_temp, state.zone_temps_k[i]);
    residual[i] = std::abs(residual[i]);
  }
  return residual;
}

}  // namespace vavsim
