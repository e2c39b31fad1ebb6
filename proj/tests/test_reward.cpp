#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "vavsim/reward.hpp"

using namespace vavsim;

namespace {

const BandsF kBands;  // 71-74 comfort, 60-90 safe

double quad(double t) {
  const double d = t - 72.5;
  return d * d;
}

}  // namespace

TEST_CASE("in-band zones cost nothing, edges included") {
  RewardWeights w;
  const std::vector<double> temps{71.0, 74.0, 72.5, 73.9, 71.1, 72.0};
  CHECK(comfort_loss(temps, w, kBands, true) == 0.0);
  CHECK(comfort_loss(temps, w, kBands, false) == 0.0);
}

TEST_CASE("out-of-band zones pay distance squared from the band midpoint") {
  RewardWeights w;
  w.eta_t = 2.0;
  const std::vector<double> temps{70.0, 76.0, 72.0, 72.0, 72.0, 72.0};
  const double want = -2.0 * (quad(70.0) + quad(76.0));
  CHECK(comfort_loss(temps, w, kBands, true) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("comfort deviation is only charged during work hours") {
  RewardWeights w;
  const std::vector<double> temps{68.0, 72.0, 72.0, 72.0, 72.0, 72.0};
  CHECK(comfort_loss(temps, w, kBands, true) < 0.0);
  CHECK(comfort_loss(temps, w, kBands, false) == 0.0);
}

TEST_CASE("leaving the safe band costs the big penalty at any hour") {
  RewardWeights w;
  const std::vector<double> temps{95.0, 72.0, 72.0, 72.0, 72.0, 59.0};
  CHECK(comfort_loss(temps, w, kBands, false) == -2e6);
  // During work the penalty replaces the quadratic term for that zone,
  // it does not stack on top of it.
  CHECK(comfort_loss(temps, w, kBands, true) == -2e6);
  w.safety_penalty = 500.0;
  CHECK(comfort_loss(temps, w, kBands, false) == -1000.0);
}

TEST_CASE("the band edge is a jump, not a ramp") {
  RewardWeights w;
  w.eta_t = 4.0;
  std::vector<double> temps{74.0, 72.0, 72.0, 72.0, 72.0, 72.0};
  CHECK(comfort_loss(temps, w, kBands, true) == 0.0);
  temps[0] = 74.0000001;
  // Quadratic distance is measured from the midpoint, so stepping just past
  // the edge costs almost (width/2)^2 = 2.25 immediately.
  CHECK(comfort_loss(temps, w, kBands, true) ==
        doctest::Approx(-4.0 * 2.25).epsilon(1e-6));
}

TEST_CASE("flat comfort penalty counts zones, not distance") {
  const std::vector<double> temps{70.9, 74.1, 72.0, 72.0, 50.0, 72.0};
  CHECK(binary_comfort_loss(temps, kBands) == -3.0);
  const std::vector<double> inside{71.0, 74.0, 72.0, 72.0, 72.0, 72.0};
  CHECK(binary_comfort_loss(inside, kBands) == 0.0);
}

TEST_CASE("energy loss is the scaled electric draw") {
  RewardWeights w;
  w.eta_e = 3.0;
  CHECK(energy_loss(0.0, w, 1000.0) == 0.0);
  CHECK(energy_loss(500.0, w, 1000.0) == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(energy_loss(1000.0, w, 1000.0) == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK_THROWS_AS(energy_loss(1.0, w, 0.0), std::runtime_error);
  CHECK_THROWS_AS(energy_loss(1.0, w, -5.0), std::runtime_error);
}

TEST_CASE("smoothness loss counts toggled terminals") {
  RewardWeights w;
  w.eta_s = 2.0;
  const std::vector<int> now{1, 1, 0, 0, 1, 0};
  const std::vector<int> prev{1, 0, 0, 1, 1, 0};
  CHECK(smoothness_loss(now, prev, w) == -4.0);
  CHECK(smoothness_loss(now, now, w) == 0.0);
  const std::vector<int> short_vec{1, 0};
  CHECK_THROWS_AS(smoothness_loss(now, short_vec, w), std::runtime_error);
}

TEST_CASE("reward components add up") {
  const RewardBreakdown r = total_reward(-2.0, -0.5, -1.0);
  CHECK(r.l_t == -2.0);
  CHECK(r.l_e == -0.5);
  CHECK(r.l_s == -1.0);
  CHECK(r.total() == -3.5);
}

TEST_CASE("each component scales linearly in its weight") {
  RewardWeights w1;
  RewardWeights w2;
  w2.eta_t = 2.0 * w1.eta_t;
  w2.eta_e = 2.0 * w1.eta_e;
  w2.eta_s = 2.0 * w1.eta_s;
  const std::vector<double> temps{69.0, 77.0, 72.0, 72.0, 72.0, 72.0};
  const std::vector<int> now{1, 1, 1, 0, 0, 0};
  const std::vector<int> prev{0, 0, 0, 0, 0, 0};
  CHECK(comfort_loss(temps, w2, kBands, true) ==
        doctest::Approx(2.0 * comfort_loss(temps, w1, kBands, true)));
  CHECK(energy_loss(400.0, w2, 1000.0) ==
        doctest::Approx(2.0 * energy_loss(400.0, w1, 1000.0)));
  CHECK(smoothness_loss(now, prev, w2) ==
        doctest::Approx(2.0 * smoothness_loss(now, prev, w1)));
}

TEST_CASE("weight validation rejects negatives") {
  RewardWeights w;
  CHECK_NOTHROW(w.validate());
  w.eta_t = -1.0;
  CHECK_THROWS_AS(w.validate(), std::runtime_error);
  w = RewardWeights{};
  w.safety_penalty = -1.0;
  CHECK_THROWS_AS(w.validate(), std::runtime_error);
}
