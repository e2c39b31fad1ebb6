#pragma once

#include <string>
#include <vector>

namespace vavsim {

struct ZoneSpec {
  int id = 0;
  double floor_area = 0.0;              // m^2
  double height = 0.0;                  // m
  double window_area = 0.0;             // m^2
  double window_absorptance = 0.0;      // dimensionless, [0, 1]
  double thermal_mass_multiplier = 5.0; // lumps furniture/walls into the air node
  double internal_gain_occupied = 0.0;  // W
  double internal_gain_vacant = 0.0;    // W

  double volume() const { return floor_area * height; }
  void validate() const;
};

enum class CouplingKind { Conductive, Convective };

// One thermal interface between two zones. Conductive interfaces model a
// partition wall (k/d per unit area); convective ones model an open boundary.
struct Coupling {
  int zone_a = 0;
  int zone_b = 0;
  CouplingKind kind = CouplingKind::Conductive;
  double surface_area = 0.0;            // m^2
  double conductivity = 0.0;            // W/(m K), conductive only
  double thickness = 0.0;               // m, conductive only
  double convective_coefficient = 0.0;  // W/(m^2 K), convective only

  double conductance() const;           // W/K
  void validate() const;
};

struct BuildingModel {
  std::vector<ZoneSpec> zones;
  std::vector<Coupling> couplings;
  double air_density = 1.204;           // kg/m^3
  double air_specific_heat = 1005.0;    // J/(kg K)

  int zone_index(int id) const;         // -1 when absent
  void validate() const;
};

struct WeatherSample {
  double minutes = 0.0;    // since series start
  double outdoor_k = 0.0;  // drybulb
  double solar_k = 0.0;    // sol-air temperature seen by windows
  void validate() const;
};

struct ThermalState {
  std::vector<double> zone_temps_k;
  double clock_min = 0.0;  // since episode start
};

}  // namespace vavsim
