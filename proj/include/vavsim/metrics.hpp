#pragma once

#include "vavsim/log.hpp"
#include "vavsim/vav.hpp"

namespace vavsim {

struct HomogeneityStats {
  double mean_range_f = 0.0;     // time-mean of max - min across zones
  double mean_variance_f2 = 0.0; // time-mean population variance across zones
};

// Fraction of zone-steps inside the comfort band over work-hour steps.
// Throws when the log has no work-hour steps.
double ccr(const EpisodeLog& log, const BandsF& bands);
double cvr(const EpisodeLog& log, const BandsF& bands);

// Same count over every step, work or not.
double ccr_all_steps(const EpisodeLog& log, const BandsF& bands);

double total_energy_j(const EpisodeLog& log);

// 100 * (1 - candidate / baseline) by total energy. Throws on zero baseline.
double energy_saving_ratio(const EpisodeLog& candidate,
                           const EpisodeLog& baseline);

HomogeneityStats homogeneity_stats(const EpisodeLog& log);

// Logical toggles between consecutive rows, summed over terminals.
long transition_count(const EpisodeLog& log);

}  // namespace vavsim
