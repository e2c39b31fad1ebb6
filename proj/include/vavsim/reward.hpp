#pragma once

#include <span>

#include "vavsim/vav.hpp"

namespace vavsim {

struct RewardWeights {
  double eta_t = 1.0;            // comfort loss factor
  double eta_e = 1.0;            // energy loss factor
  double eta_s = 1.0;            // signal smoothness loss factor
  double safety_penalty = 1e6;   // charged per zone outside the safe band
  void validate() const;
};

struct RewardBreakdown {
  double l_t = 0.0;
  double l_e = 0.0;
  double l_s = 0.0;
  double total() const { return l_t + l_e + l_s; }
};

// Quadratic distance-to-band-midpoint penalty per out-of-comfort zone, active
// during work hours; plus the safety penalty per zone outside the safe band
// at any time. In-band zones contribute 0, band edges included.
double comfort_loss(std::span<const double> zone_temps_f,
                    const RewardWeights& weights, const BandsF& bands,
                    bool during_work);

// Flat -1 per out-of-comfort zone, regardless of distance.
double binary_comfort_loss(std::span<const double> zone_temps_f,
                           const BandsF& bands);

// -eta_e * e_t / e_scale. e_scale is the summed peak electric power of all
// terminals times the step length, so the unweighted term lies in [0, 1].
double energy_loss(double e_t_j, const RewardWeights& weights, double e_scale_j);

// -eta_s per logical toggle between consecutive action vectors.
double smoothness_loss(std::span<const int> actions_now,
                       std::span<const int> actions_prev,
                       const RewardWeights& weights);

RewardBreakdown total_reward(double l_t, double l_e, double l_s);

}  // namespace vavsim
