#pragma once

#include <string>
#include <vector>

#include "vavsim/reward.hpp"

namespace vavsim {

// One simulation step: the action held over [t_min, t_min + dt), the zone
// temperatures at the end of the step, and the step's energy and reward.
struct StepRecord {
  double t_min = 0.0;
  double outdoor_f = 0.0;
  std::vector<double> zone_f;
  std::vector<int> vav;   // logical 0/1 per terminal
  std::vector<int> phys;  // 1 heat, -1 cool, 0 idle
  double energy_j = 0.0;
  RewardBreakdown reward;
  bool work = false;
};

struct EpisodeLog {
  std::vector<StepRecord> steps;
  int zone_count() const;
  void validate() const;  // uniform grid, constant arity
};

// Fixed-schema CSV for 6-zone logs; see write header in log.cpp.
void write_episode_csv(const EpisodeLog& log, const std::string& path);
EpisodeLog load_episode_csv(const std::string& path);

}  // namespace vavsim
