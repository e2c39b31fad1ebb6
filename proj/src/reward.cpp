#include "vavsim/reward.hpp"

#include <stdexcept>

namespace vavsim {

void RewardWeights::validate() const {
  if (!(eta_t >= 0.0) || !(eta_e >= 0.0) || !(eta_s >= 0.0))
    throw std::runtime_error("reward: eta factors must be non-negative");
  if (!(safety_penalty >= 0.0))
    throw std::runtime_error("reward: safety_penalty must be non-negative");
}

double comfort_loss(std::span<const double> zone_temps_f,
                    const RewardWeights& weights, const BandsF& bands,
                    bool during_work) {
  const double target = 0.5 * (bands.comfort_low + bands.comfort_high);
  double loss = 0.0;
  for (const double t : zone_temps_f) {
    if (t < bands.safe_low || t > bands.safe_high) {
      loss -= weights.safety_penalty;
      continue;
    }
    if (!during_work) continue;
    if (t < bands.comfort_low || t > bands.comfort_high) {
      const double d = t - target;
      loss -= weights.eta_t * d * d;
    }
  }
  return loss;
}

double binary_comfort_loss(std::span<const double> zone_temps_f,
                           const BandsF& bands) {
  double loss = 0.0;
  for (const double t : zone_temps_f)
    if (t < bands.comfort_low || t > bands.comfort_high) loss -= 1.0;
  return loss;
}

double energy_loss(double e_t_j, const RewardWeights& weights,
                   double e_scale_j) {
  if (!(e_scale_j > 0.0))
    throw std::runtime_error("reward: e_scale must be positive");
  return -weights.eta_e * (e_t_j / e_scale_j);
}

double smoothness_loss(std::span<const int> actions_now,
                       std::span<const int> actions_prev,
                       const RewardWeights& weights) {
  if (actions_now.size() != actions_prev.size())
    throw std::runtime_error("reward: action vectors must have equal arity");
  int toggles = 0;
  for (std::size_t i = 0; i < actions_now.size(); ++i)
    if ((actions_now[i] != 0) != (actions_prev[i] != 0)) ++toggles;
  return -weights.eta_s * toggles;
}

RewardBreakdown total_reward(double l_t, double l_e, double l_s) {
  return RewardBreakdown{l_t, l_e, l_s};
}

}  // namespace vavsim
