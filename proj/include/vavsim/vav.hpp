#pragma once

#include <string>
#include <vector>

#include "vavsim/building.hpp"
#include "vavsim/thermal.hpp"
#include "vavsim/units.hpp"

namespace vavsim {

struct VavSpec {
  int zone_id = 0;
  double mass_flow_on = 0.5;       // kg/s while heating or cooling
  double supply_temp_heat = fahrenheit_to_kelvin(104.0);
  double supply_temp_cool = fahrenheit_to_kelvin(55.0);
  double cop_heat = 3.0;
  double cop_cool = 3.5;
  double fan_power = 200.0;        // W while air is moving
  void validate() const;
};

// Setpoint bands in kelvin, for plant control. The comfort band applies while
// a terminal is logically on; the safe band applies always.
struct ComfortBands {
  double comfort_low = 0.0;
  double comfort_high = 0.0;
  double safe_low = 0.0;
  double safe_high = 0.0;
  double hysteresis = 0.0;  // K past the band midpoint before shutting off
  void validate() const;
};

// The same bands in Fahrenheit, kept verbatim from configuration so reward
// and metric edge checks are exact in the unit they are written in.
struct BandsF {
  double comfort_low = 71.0;
  double comfort_high = 74.0;
  double safe_low = 60.0;
  double safe_high = 90.0;
};

ComfortBands default_bands();   // 71-74 F comfort, 60-90 F safe, 0.3 K hysteresis
BandsF default_bands_f();

enum class PhysicalCommand { Idle, HeatOn, CoolOn };

struct VavStatus {
  int logical = 0;  // 0: setpoint comfort off, 1: comfort on
  PhysicalCommand physical = PhysicalCommand::Idle;
};

// Maps a logical on/off choice to a physical command. The active band is the
// comfort band when logical == 1, the safe band otherwise. Below the band the
// terminal heats, above it cools; inside it a running mode keeps going until
// the zone passes the band midpoint by the hysteresis margin.
PhysicalCommand translate_action(int logical, double t_zone,
                                 const ComfortBands& bands,
                                 PhysicalCommand previous);

ZoneFlow plant_output(PhysicalCommand cmd, const VavSpec& spec);

// Electric joules over one step: thermal power over the mode's COP plus fan
// power, zero when idle.
double electric_energy(PhysicalCommand cmd, const VavSpec& spec,
                       double specific_heat, double t_zone, double dt_s);

// Largest electric draw the terminal can have anywhere inside the safe band.
double max_electric_power(const VavSpec& spec, double specific_heat,
                          const ComfortBands& bands);

// Steady-state capacity check at the safe band edges under weather extremes.
// Returns human-readable warnings; empty means the plant is adequately sized.
std::vector<std::string> sizing_warnings(const BuildingModel& model,
                                         const std::vector<VavSpec>& vavs,
                                         const ComfortBands& bands);

}  // namespace vavsim
