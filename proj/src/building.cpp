#include "vavsim/building.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace vavsim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("building: " + what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void ZoneSpec::validate() const {
  require(finite(floor_area) && floor_area > 0.0,
          "zone " + std::to_string(id) + " floor_area must be positive");
  require(finite(height) && height > 0.0,
          "zone " + std::to_string(id) + " height must be positive");
  require(finite(window_area) && window_area >= 0.0,
          "zone " + std::to_string(id) + " window_area must be non-negative");
  require(finite(window_absorptance) && window_absorptance >= 0.0 &&
              window_absorptance <= 1.0,
          "zone " + std::to_string(id) + " window_absorptance must be in [0, 1]");
  require(finite(thermal_mass_multiplier) && thermal_mass_multiplier >= 1.0,
          "zone " + std::to_string(id) + " thermal_mass_multiplier must be >= 1");
  require(finite(internal_gain_occupied) && internal_gain_occupied >= 0.0,
          "zone " + std::to_string(id) + " internal_gain_occupied must be non-negative");
  require(finite(internal_gain_vacant) && internal_gain_vacant >= 0.0,
          "zone " + std::to_string(id) + " internal_gain_vacant must be non-negative");
}

double Coupling::conductance() const {
  if (kind == CouplingKind::Conductive)
    return conductivity / thickness * surface_area;
  return convective_coefficient * surface_area;
}

void Coupling::validate() const {
  const std::string tag =
      "coupling " + std::to_string(zone_a) + "-" + std::to_string(zone_b);
  require(zone_a != zone_b, tag + " must join two distinct zones");
  require(finite(surface_area) && surface_area > 0.0,
          tag + " surface_area must be positive");
  if (kind == CouplingKind::Conductive) {
    require(finite(conductivity) && conductivity > 0.0,
            tag + " conductivity must be positive");
    require(finite(thickness) && thickness > 0.0,
            tag + " thickness must be positive");
  } else {
    require(finite(convective_coefficient) && convective_coefficient > 0.0,
            tag + " convective_coefficient must be positive");
  }
}

int BuildingModel::zone_index(int id) const {
  for (std::size_t i = 0; i < zones.size(); ++i)
    if (zones[i].id == id) return static_cast<int>(i);
  return -1;
}

void BuildingModel::validate() const {
  require(!zones.empty(), "at least one zone required");
  require(finite(air_density) && air_density > 0.0, "air_density must be positive");
  require(finite(air_specific_heat) && air_specific_heat > 0.0,
          "air_specific_heat must be positive");
  std::set<int> ids;
  for (const auto& z : zones) {
    z.validate();
    require(ids.insert(z.id).second,
            "duplicate zone id " + std::to_string(z.id));
  }
  for (const auto& c : couplings) {
    c.validate();
    require(zone_index(c.zone_a) >= 0,
            "coupling references unknown zone " + std::to_string(c.zone_a));
    require(zone_index(c.zone_b) >= 0,
            "coupling references unknown zone " + std::to_string(c.zone_b));
  }
}

void WeatherSample::validate() const {
  require(finite(minutes) && minutes >= 0.0, "weather minutes must be non-negative");
  require(finite(outdoor_k) && outdoor_k >= 233.0 && outdoor_k <= 330.0,
          "outdoor temperature must lie in 233..330 K");
  require(finite(solar_k) && solar_k >= outdoor_k - 5.0,
          "solar temperature must not sit below outdoor - 5 K");
}

}  // namespace vavsim
