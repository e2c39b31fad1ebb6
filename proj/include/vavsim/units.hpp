#pragma once

namespace vavsim {

// Stefan-Boltzmann constant, W m^-2 K^-4.
inline constexpr double kStefanBoltzmann = 5.670374419e-8;

inline constexpr double fahrenheit_to_kelvin(double f) {
  return (f - 32.0) * 5.0 / 9.0 + 273.15;
}

inline constexpr double kelvin_to_fahrenheit(double k) {
  return (k - 273.15) * 9.0 / 5.0 + 32.0;
}

// Temperature differences, not absolute temperatures.
inline constexpr double delta_f_to_k(double df) { return df * 5.0 / 9.0; }
inline constexpr double delta_k_to_f(double dk) { return dk * 9.0 / 5.0; }

}  // namespace vavsim
