#include "vavsim/vav.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vavsim/units.hpp"
#include "vavsim/weather.hpp"

namespace vavsim {

void VavSpec::validate() const {
  const std::string tag = "vav for zone " + std::to_string(zone_id);
  if (!(mass_flow_on > 0.0))
    throw std::runtime_error(tag + ": mass_flow_on must be positive");
  if (!(supply_temp_heat > 0.0) || !(supply_temp_cool > 0.0))
    throw std::runtime_error(tag + ": supply temperatures must be positive kelvin");
  if (supply_temp_cool >= supply_temp_heat)
    throw std::runtime_error(tag + ": cooling supply must be colder than heating supply");
  if (!(cop_heat > 0.0) || !(cop_cool > 0.0))
    throw std::runtime_error(tag + ": COPs must be positive");
  if (!(fan_power >= 0.0))
    throw std::runtime_error(tag + ": fan_power must be non-negative");
}

void ComfortBands::validate() const {
  if (!(comfort_low < comfort_high))
    throw std::runtime_error("bands: comfort band must have positive width");
  if (!(safe_low < safe_high))
    throw std::runtime_error("bands: safe band must have positive width");
  if (comfort_low < safe_low || comfort_high > safe_high)
    throw std::runtime_error("bands: comfort band must sit inside the safe band");
  if (!(hysteresis >= 0.0))
    throw std::runtime_error("bands: hysteresis must be non-negative");
  if (hysteresis >= 0.5 * (comfort_high - comfort_low))
    throw std::runtime_error("bands: hysteresis must be smaller than half the comfort band");
}

ComfortBands default_bands() {
  ComfortBands b;
  b.comfort_low = fahrenheit_to_kelvin(71.0);
  b.comfort_high = fahrenheit_to_kelvin(74.0);
  b.safe_low = fahrenheit_to_kelvin(60.0);
  b.safe_high = fahrenheit_to_kelvin(90.0);
  b.hysteresis = 0.3;
  return b;
}

BandsF default_bands_f() { return BandsF{}; }

PhysicalCommand translate_action(int logical, double t_zone,
                                 const ComfortBands& bands,
                                 PhysicalCommand previous) {
  if (logical != 0 && logical != 1)
    throw std::runtime_error("vav: logical action must be 0 or 1");
  const double lo = logical ? bands.comfort_low : bands.safe_low;
  const double hi = logical ? bands.comfort_high : bands.safe_high;
  if (t_zone < lo) return PhysicalCommand::HeatOn;
  if (t_zone > hi) return PhysicalCommand::CoolOn;
  // Inside the band, a running mode carries to the far side of the midpoint
  // so the terminal does not chatter at the band edge.
  const double mid = 0.5 * (lo + hi);
  if (previous == PhysicalCommand::HeatOn && t_zone < mid + bands.hysteresis)
    return PhysicalCommand::HeatOn;
  if (previous == PhysicalCommand::CoolOn && t_zone > mid - bands.hysteresis)
    return PhysicalCommand::CoolOn;
  return PhysicalCommand::Idle;
}

ZoneFlow plant_output(PhysicalCommand cmd, const VavSpec& spec) {
  switch (cmd) {
    case PhysicalCommand::HeatOn:
      return {spec.mass_flow_on, spec.supply_temp_heat};
    case PhysicalCommand::CoolOn:
      return {spec.mass_flow_on, spec.supply_temp_cool};
    case PhysicalCommand::Idle:
    default:
      return {0.0, 0.0};
  }
}

double electric_energy(PhysicalCommand cmd, const VavSpec& spec,
                       double specific_heat, double t_zone, double dt_s) {
  if (cmd == PhysicalCommand::Idle) return 0.0;
  const bool heating = cmd == PhysicalCommand::HeatOn;
  const double supply = heating ? spec.supply_temp_heat : spec.supply_temp_cool;
  const double cop = heating ? spec.cop_heat : spec.cop_cool;
  const double thermal =
      std::abs(spec.mass_flow_on * specific_heat * (supply - t_zone));
  return (thermal / cop + spec.fan_power) * dt_s;
}

double max_electric_power(const VavSpec& spec, double specific_heat,
                          const ComfortBands& bands) {
  const double flow_heat = spec.mass_flow_on * specific_heat *
                           (spec.supply_temp_heat - bands.safe_low) /
                           spec.cop_heat;
  const double flow_cool = spec.mass_flow_on * specific_heat *
                           (bands.safe_high - spec.supply_temp_cool) /
                           spec.cop_cool;
  return std::max({flow_heat, flow_cool, 0.0}) + spec.fan_power;
}

std::vector<std::string> sizing_warnings(const BuildingModel& model,
                                         const std::vector<VavSpec>& vavs,
                                         const ComfortBands& bands) {
  std::vector<std::string> warnings;
  const double o_min = fahrenheit_to_kelvin(kOutdoorMinF);
  const double o_max = fahrenheit_to_kelvin(kOutdoorMaxF);
  const double sol_max = o_max + kSolarBoostK;
  for (const auto& v : vavs) {
    const int idx = model.zone_index(v.zone_id);
    if (idx < 0) continue;
    const auto& z = model.zones[idx];
    const double cp = model.air_specific_heat;

    // Heating at the cold safe edge against a clear cold sky, no gain credit.
    const double t_lo = bands.safe_low;
    const double envelope_loss = kStefanBoltzmann * z.window_absorptance *
                                 z.window_area *
                                 (t_lo * t_lo * t_lo * t_lo -
                                  o_min * o_min * o_min * o_min);
    const double heat_cap = v.mass_flow_on * cp * (v.supply_temp_heat - t_lo);
    if (heat_cap < envelope_loss)
      warnings.push_back("zone " + std::to_string(z.id) +
                         ": heating capacity " + std::to_string(heat_cap) +
                         " W below worst-case envelope loss " +
                         std::to_string(envelope_loss) + " W");

    // Cooling at the hot safe edge under peak sun with full occupancy.
    const double t_hi = bands.safe_high;
    const double envelope_gain = kStefanBoltzmann * z.window_absorptance *
                                     z.window_area *
                                     (sol_max * sol_max * sol_max * sol_max -
                                      t_hi * t_hi * t_hi * t_hi) +
                                 z.internal_gain_occupied;
    const double cool_cap = v.mass_flow_on * cp * (t_hi - v.supply_temp_cool);
    if (cool_cap < envelope_gain)
      warnings.push_back("zone " + std::to_string(z.id) +
                         ": cooling capacity " + std::to_string(cool_cap) +
                         " W below worst-case envelope gain " +
                         std::to_string(envelope_gain) + " W");
  }
  return warnings;
}

}  // namespace vavsim
