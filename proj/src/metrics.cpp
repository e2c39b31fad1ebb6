#include "vavsim/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace vavsim {

namespace {

bool in_band(double t, const BandsF& b) {
  return t >= b.comfort_low && t <= b.comfort_high;
}

double compliance(const EpisodeLog& log, const BandsF& bands, bool work_only) {
  long total = 0;
  long inside = 0;
  for (const auto& s : log.steps) {
    if (work_only && !s.work) continue;
    for (double t : s.zone_f) {
      ++total;
      if (in_band(t, bands)) ++inside;
    }
  }
  if (total == 0)
    throw std::runtime_error(work_only
                                 ? "metrics: no work-hour steps in log"
                                 : "metrics: empty log");
  return static_cast<double>(inside) / static_cast<double>(total);
}

}  // namespace

double ccr(const EpisodeLog& log, const BandsF& bands) {
  return compliance(log, bands, true);
}

double cvr(const EpisodeLog& log, const BandsF& bands) {
  return 1.0 - ccr(log, bands);
}

double ccr_all_steps(const EpisodeLog& log, const BandsF& bands) {
  return compliance(log, bands, false);
}

double total_energy_j(const EpisodeLog& log) {
  double sum = 0.0;
  for (const auto& s : log.steps) sum += s.energy_j;
  return sum;
}

double energy_saving_ratio(const EpisodeLog& candidate,
                           const EpisodeLog& baseline) {
  const double base = total_energy_j(baseline);
  if (!(base > 0.0))
    throw std::runtime_error("metrics: baseline energy is zero, saving undefined");
  return 100.0 * (1.0 - total_energy_j(candidate) / base);
}

HomogeneityStats homogeneity_stats(const EpisodeLog& log) {
  if (log.steps.empty() || log.zone_count() < 2)
    throw std::runtime_error("metrics: homogeneity needs >= 2 zones");
  double range_sum = 0.0;
  double var_sum = 0.0;
  for (const auto& s : log.steps) {
    const auto [lo, hi] = std::minmax_element(s.zone_f.begin(), s.zone_f.end());
    range_sum += *hi - *lo;
    double mean = 0.0;
    for (double t : s.zone_f) mean += t;
    mean /= static_cast<double>(s.zone_f.size());
    double var = 0.0;
    for (double t : s.zone_f) var += (t - mean) * (t - mean);
    var /= static_cast<double>(s.zone_f.size());
    var_sum += var;
  }
  const double n = static_cast<double>(log.steps.size());
  return HomogeneityStats{range_sum / n, var_sum / n};
}

long transition_count(const EpisodeLog& log) {
  long count = 0;
  for (std::size_t i = 1; i < log.steps.size(); ++i) {
    const auto& prev = log.steps[i - 1].vav;
    const auto& now = log.steps[i].vav;
    for (std::size_t z = 0; z < now.size(); ++z)
      if ((now[z] != 0) != (prev[z] != 0)) ++count;
  }
  return count;
}

}  // namespace vavsim
