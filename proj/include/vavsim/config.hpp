#pragma once

#include <string>
#include <vector>

#include "vavsim/building.hpp"
#include "vavsim/schedule.hpp"
#include "vavsim/vav.hpp"

namespace vavsim {

struct BuildingConfig {
  std::string name;
  BuildingModel model;
  std::vector<VavSpec> vavs;  // ordered like model.zones, one per zone
  ComfortBands bands;         // kelvin, drives the plant
  BandsF bands_f;             // the file's F values, drives reward and metrics
  Schedule schedule;
  std::vector<std::string> warnings;  // sizing findings from load time
  void validate() const;
};

// Temperatures in the file are F (suffix _F); geometry and flows are SI.
BuildingConfig load_building_config(const std::string& path);
BuildingConfig parse_building_config(const std::string& json_text,
                                     const std::string& origin);

}  // namespace vavsim
