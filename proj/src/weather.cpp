#include "vavsim/weather.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vavsim/units.hpp"

namespace vavsim {

namespace {

// Profile rows are written in F for legibility against published climate
// normals; amplitudes are temperature deltas. Noise is truncated at 3 sigma
// so mean + seasonal + diurnal + 3 sigma bounds the generated maximum.
WeatherProfile make_profile(const std::string& name, double mean_f,
                            double seasonal_f, double diurnal_f, double noise_f,
                            double humidity) {
  WeatherProfile p;
  p.name = name;
  p.annual_mean_k = fahrenheit_to_kelvin(mean_f);
  p.seasonal_amplitude_k = delta_f_to_k(seasonal_f);
  p.diurnal_amplitude_k = delta_f_to_k(diurnal_f);
  p.noise_std_k = delta_f_to_k(noise_f);
  p.humidity_mean = humidity;
  return p;
}

}  // namespace

void WeatherProfile::validate() const {
  if (!(annual_mean_k > 0.0))
    throw std::runtime_error("weather: profile mean must be positive kelvin");
  if (seasonal_amplitude_k < 0.0 || diurnal_amplitude_k < 0.0 ||
      noise_std_k < 0.0)
    throw std::runtime_error("weather: profile amplitudes must be non-negative");
}

const std::vector<WeatherProfile>& builtin_profiles() {
  static const std::vector<WeatherProfile> profiles = {
      make_profile("SC_Greenville", 60.17, 21.91, 8.0, 2.0, 0.6781),
      make_profile("AZ_Phoenix", 74.89, 23.03, 8.0, 2.0, 0.3418),
      make_profile("CA_LosAngeles", 62.01, 18.99, 8.0, 2.0, 0.6992),
      make_profile("FL_Miami", 76.13, 5.95, 8.0, 2.0, 0.7257),
      make_profile("MA_Boston", 51.11, 33.85, 8.0, 2.0, 0.6571),
      make_profile("MN_InternationalFalls", 38.09, 42.91, 8.0, 2.0, 0.7071),
      make_profile("TX_Houston", 69.97, 13.01, 8.0, 2.0, 0.7427),
  };
  return profiles;
}

const WeatherProfile* find_profile(const std::string& name) {
  for (const auto& p : builtin_profiles())
    if (p.name == name) return &p;
  return nullptr;
}

double solar_temperature(double outdoor_k, double minute_of_day) {
  const double hour = minute_of_day / 60.0;
  if (hour < 6.0 || hour > 18.0) return outdoor_k;
  const double lift = std::sin(std::numbers::pi * (hour - 6.0) / 12.0);
  return outdoor_k + kSolarBoostK * std::max(0.0, lift);
}

std::vector<WeatherSample> generate_weather(const WeatherProfile& profile,
                                            int duration_days, int step_minutes,
                                            std::uint64_t seed) {
  profile.validate();
  if (duration_days < 1)
    throw std::runtime_error("weather: duration_days must be >= 1");
  if (step_minutes < 1 || 60 % step_minutes != 0)
    throw std::runtime_error("weather: step_minutes must divide 60");

  const double lo = fahrenheit_to_kelvin(kOutdoorMinF);
  const double hi = fahrenheit_to_kelvin(kOutdoorMaxF);
  const std::size_t count =
      static_cast<std::size_t>(duration_days) * 1440 / step_minutes + 1;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::vector<WeatherSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double minutes = static_cast<double>(k) * step_minutes;
    const double day = minutes / 1440.0;
    const double hour = std::fmod(minutes / 60.0, 24.0);
    double o = profile.annual_mean_k +
               profile.seasonal_amplitude_k *
                   std::sin(two_pi * day / 365.0 - std::numbers::pi / 2.0) +
               profile.diurnal_amplitude_k *
                   std::sin(two_pi * (hour - 9.0) / 24.0);
    if (profile.noise_std_k > 0.0) {
      const double n = gauss(rng) * profile.noise_std_k;
      o += std::clamp(n, -3.0 * profile.noise_std_k, 3.0 * profile.noise_std_k);
    }
    o = std::clamp(o, lo, hi);
    WeatherSample s;
    s.minutes = minutes;
    s.outdoor_k = o;
    s.solar_k = solar_temperature(o, std::fmod(minutes, 1440.0));
    out.push_back(s);
  }
  return out;
}

void write_weather_csv(std::span<const WeatherSample> samples,
                       const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("weather: cannot open " + path + " for writing");
  f << "t_min,outdoor_F,t_sol_F\n";
  char line[128];
  for (const auto& s : samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", s.minutes,
                  kelvin_to_fahrenheit(s.outdoor_k),
                  kelvin_to_fahrenheit(s.solar_k));
    f << line;
  }
  if (!f) throw std::runtime_error("weather: write failed for " + path);
}

std::vector<WeatherSample> load_weather_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("weather: cannot open " + path);
  std::string line;
  if (!std::getline(f, line))
    throw std::runtime_error("weather: " + path + " is empty");
  bool has_sol = false;
  if (line == "t_min,outdoor_F,t_sol_F")
    has_sol = true;
  else if (line != "t_min,outdoor_F")
    throw std::runtime_error("weather: " + path +
                             " line 1: expected header t_min,outdoor_F[,t_sol_F]");

  std::vector<WeatherSample> out;
  std::size_t lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size())
        throw std::runtime_error("weather: " + path + " line " +
                                 std::to_string(lineno) + ": bad number '" +
                                 cell + "'");
      vals.push_back(v);
    }
    const std::size_t expect = has_sol ? 3 : 2;
    if (vals.size() != expect)
      throw std::runtime_error("weather: " + path + " line " +
                               std::to_string(lineno) + ": expected " +
                               std::to_string(expect) + " columns");
    WeatherSample s;
    s.minutes = vals[0];
    s.outdoor_k = fahrenheit_to_kelvin(vals[1]);
    s.solar_k = has_sol ? fahrenheit_to_kelvin(vals[2])
                        : solar_temperature(s.outdoor_k,
                                            std::fmod(s.minutes, 1440.0));
    s.validate();
    out.push_back(s);
  }
  if (out.size() >= 3) {
    const double dt = out[1].minutes - out[0].minutes;
    for (std::size_t i = 2; i < out.size(); ++i)
      if (std::abs(out[i].minutes - out[i - 1].minutes - dt) > 1e-9)
        throw std::runtime_error("weather: " + path +
                                 ": rows are not uniformly spaced");
  }
  return out;
}

}  // namespace vavsim
