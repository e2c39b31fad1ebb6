#include <doctest.h>

#include "vavsim/units.hpp"

using namespace vavsim;

TEST_CASE("temperature conversions hit the fixed points") {
  CHECK(fahrenheit_to_kelvin(32.0) == doctest::Approx(273.15).epsilon(1e-14));
  CHECK(fahrenheit_to_kelvin(212.0) == doctest::Approx(373.15).epsilon(1e-14));
  CHECK(fahrenheit_to_kelvin(-40.0) == doctest::Approx(233.15).epsilon(1e-14));
  CHECK(kelvin_to_fahrenheit(273.15) == doctest::Approx(32.0).epsilon(1e-14));
  CHECK(kelvin_to_fahrenheit(303.15) == doctest::Approx(86.0).epsilon(1e-14));
}

TEST_CASE("temperature difference conversions scale by 9/5") {
  CHECK(delta_f_to_k(9.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(delta_k_to_f(5.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(delta_f_to_k(0.54) == doctest::Approx(0.3).epsilon(1e-12));
}

// Kelvin is the authoritative unit: converting a kelvin value to Fahrenheit
// for a file and back must restore it bit for bit, across the whole
// operating envelope. File round trips depend on this identity.
TEST_CASE("kelvin -> fahrenheit -> kelvin is exact over the operating range") {
  for (int i = 0; i <= 200000; ++i) {
    const double k = 230.0 + i * (100.0 / 200000.0);
    CHECK(fahrenheit_to_kelvin(kelvin_to_fahrenheit(k)) == k);
  }
}

TEST_CASE("radiation constant") {
  CHECK(kStefanBoltzmann == 5.670374419e-8);
}
