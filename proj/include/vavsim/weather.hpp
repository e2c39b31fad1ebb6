#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vavsim/building.hpp"

namespace vavsim {

// Outdoor drybulb operating envelope, F. Generated weather is clamped here
// and state normalization uses the same range.
inline constexpr double kOutdoorMinF = 25.0;
inline constexpr double kOutdoorMaxF = 110.0;

// Peak sol-air boost over drybulb at solar noon, K.
inline constexpr double kSolarBoostK = 20.0;

// Synthetic climate: annual and diurnal sinusoids plus Gaussian noise.
// Day 0 sits at the seasonal minimum; the diurnal peak falls mid-afternoon.
struct WeatherProfile {
  std::string name;
  double annual_mean_k = 0.0;
  double seasonal_amplitude_k = 0.0;
  double diurnal_amplitude_k = 0.0;
  double noise_std_k = 0.0;
  double humidity_mean = 0.0;  // fraction, recorded for reference only
  void validate() const;
};

const std::vector<WeatherProfile>& builtin_profiles();
const WeatherProfile* find_profile(const std::string& name);  // null when absent

// Sol-air temperature: drybulb plus a half-sine boost between 06:00 and 18:00.
double solar_temperature(double outdoor_k, double minute_of_day);

// duration_days * 24h / step_minutes samples plus one trailing sample so a
// consumer can look one step past the horizon.
std::vector<WeatherSample> generate_weather(const WeatherProfile& profile,
                                            int duration_days, int step_minutes,
                                            std::uint64_t seed);

void write_weather_csv(std::span<const WeatherSample> samples,
                       const std::string& path);
std::vector<WeatherSample> load_weather_csv(const std::string& path);

}  // namespace vavsim
