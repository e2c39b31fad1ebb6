#include "vavsim/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vavsim/units.hpp"

namespace vavsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error("config: " + origin + ": " + what);
}

double get_num(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) fail(origin, std::string("missing field '") + key + "'");
  if (!j[key].is_number()) fail(origin, std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

double get_num_or(const json& j, const char* key, double fallback,
                  const std::string& origin) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(origin, std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

int parse_clock(const std::string& text, const std::string& origin) {
  int h = 0, m = 0;
  char colon = 0;
  std::istringstream ss(text);
  if (!(ss >> h >> colon >> m) || colon != ':' || h < 0 || h > 24 || m < 0 ||
      m > 59 || !ss.eof())
    fail(origin, "bad clock string '" + text + "', expected HH:MM");
  return h * 60 + m;
}

int parse_weekday(const std::string& text, const std::string& origin) {
  static const std::map<std::string, int> days = {
      {"Mon", 0}, {"Tue", 1}, {"Wed", 2}, {"Thu", 3},
      {"Fri", 4}, {"Sat", 5}, {"Sun", 6}};
  const auto it = days.find(text);
  if (it == days.end()) fail(origin, "unknown weekday '" + text + "'");
  return it->second;
}

}  // namespace

void BuildingConfig::validate() const {
  model.validate();
  bands.validate();
  schedule.validate();
  if (vavs.size() != model.zones.size())
    throw std::runtime_error("config: need exactly one vav entry per zone");
  for (std::size_t i = 0; i < vavs.size(); ++i) {
    vavs[i].validate();
    if (vavs[i].zone_id != model.zones[i].id)
      throw std::runtime_error(
          "config: vav order must match zone order (zone " +
          std::to_string(model.zones[i].id) + ")");
  }
}

BuildingConfig parse_building_config(const std::string& json_text,
                                     const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("JSON parse error: ") + e.what());
  }

  BuildingConfig cfg;
  cfg.name = j.value("name", std::string("unnamed"));

  if (j.contains("air")) {
    cfg.model.air_density = get_num_or(j["air"], "density", 1.204, origin);
    cfg.model.air_specific_heat =
        get_num_or(j["air"], "specific_heat", 1005.0, origin);
  }

  if (!j.contains("zones") || !j["zones"].is_array() || j["zones"].empty())
    fail(origin, "missing or empty 'zones' array");
  for (const auto& z : j["zones"]) {
    ZoneSpec zone;
    zone.id = static_cast<int>(get_num(z, "id", origin));
    zone.floor_area = get_num(z, "floor_area", origin);
    zone.height = get_num(z, "height", origin);
    zone.window_area = get_num_or(z, "window_area", 0.0, origin);
    zone.window_absorptance = get_num_or(z, "window_absorptance", 0.0, origin);
    zone.thermal_mass_multiplier =
        get_num_or(z, "thermal_mass_multiplier", 5.0, origin);
    zone.internal_gain_occupied = get_num_or(
        z, "internal_gain_occupied", 10.0 * zone.floor_area, origin);
    zone.internal_gain_vacant =
        get_num_or(z, "internal_gain_vacant", 1.0 * zone.floor_area, origin);
    cfg.model.zones.push_back(zone);
  }

  if (j.contains("couplings")) {
    if (!j["couplings"].is_array()) fail(origin, "'couplings' must be an array");
    for (const auto& c : j["couplings"]) {
      Coupling coupling;
      coupling.zone_a = static_cast<int>(get_num(c, "zone_a", origin));
      coupling.zone_b = static_cast<int>(get_num(c, "zone_b", origin));
      const std::string kind = c.value("kind", std::string());
      if (kind == "conductive") {
        coupling.kind = CouplingKind::Conductive;
        coupling.conductivity = get_num(c, "conductivity", origin);
        coupling.thickness = get_num(c, "thickness", origin);
      } else if (kind == "convective") {
        coupling.kind = CouplingKind::Convective;
        coupling.convective_coefficient =
            get_num(c, "convective_coefficient", origin);
      } else {
        fail(origin, "coupling kind must be 'conductive' or 'convective'");
      }
      coupling.surface_area = get_num(c, "surface_area", origin);
      cfg.model.couplings.push_back(coupling);
    }
  }

  if (!j.contains("vav") || !j["vav"].is_array())
    fail(origin, "missing 'vav' array");
  for (const auto& v : j["vav"]) {
    VavSpec vav;
    vav.zone_id = static_cast<int>(get_num(v, "zone_id", origin));
    vav.mass_flow_on = get_num_or(v, "mass_flow_on", 0.5, origin);
    vav.supply_temp_heat =
        fahrenheit_to_kelvin(get_num_or(v, "supply_temp_heat_F", 104.0, origin));
    vav.supply_temp_cool =
        fahrenheit_to_kelvin(get_num_or(v, "supply_temp_cool_F", 55.0, origin));
    vav.cop_heat = get_num_or(v, "cop_heat", 3.0, origin);
    vav.cop_cool = get_num_or(v, "cop_cool", 3.5, origin);
    vav.fan_power = get_num_or(v, "fan_power", 200.0, origin);
    cfg.vavs.push_back(vav);
  }

  const json bands = j.value("comfort_bands", json::object());
  cfg.bands_f.comfort_low = get_num_or(bands, "comfort_low_F", 71.0, origin);
  cfg.bands_f.comfort_high = get_num_or(bands, "comfort_high_F", 74.0, origin);
  cfg.bands_f.safe_low = get_num_or(bands, "safe_low_F", 60.0, origin);
  cfg.bands_f.safe_high = get_num_or(bands, "safe_high_F", 90.0, origin);
  cfg.bands.comfort_low = fahrenheit_to_kelvin(cfg.bands_f.comfort_low);
  cfg.bands.comfort_high = fahrenheit_to_kelvin(cfg.bands_f.comfort_high);
  cfg.bands.safe_low = fahrenheit_to_kelvin(cfg.bands_f.safe_low);
  cfg.bands.safe_high = fahrenheit_to_kelvin(cfg.bands_f.safe_high);
  cfg.bands.hysteresis =
      bands.contains("hysteresis_F")
          ? delta_f_to_k(get_num(bands, "hysteresis_F", origin))
          : 0.3;

  if (j.contains("schedule")) {
    const json& s = j["schedule"];
    if (s.contains("work_start"))
      cfg.schedule.work_start_min =
          parse_clock(s["work_start"].get<std::string>(), origin);
    if (s.contains("work_end"))
      cfg.schedule.work_end_min =
          parse_clock(s["work_end"].get<std::string>(), origin);
    if (s.contains("workdays")) {
      cfg.schedule.workdays.fill(false);
      for (const auto& d : s["workdays"])
        cfg.schedule.workdays[parse_weekday(d.get<std::string>(), origin)] = true;
    }
  }

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    fail(origin, e.what());
  }
  cfg.warnings = sizing_warnings(cfg.model, cfg.vavs, cfg.bands);
  return cfg;
}

BuildingConfig load_building_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_building_config(buf.str(), path);
}

}  // namespace vavsim
