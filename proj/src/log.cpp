#include "vavsim/log.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vavsim {

namespace {

constexpr char kHeader[] =
    "t_min,outdoor_F,zone1_F,zone2_F,zone3_F,zone4_F,zone5_F,zone6_F,"
    "vav1,vav2,vav3,vav4,vav5,vav6,phys1,phys2,phys3,phys4,phys5,phys6,"
    "energy_J,l_t,l_e,l_s,reward,work";
constexpr int kColumns = 26;

}  // namespace

int EpisodeLog::zone_count() const {
  return steps.empty() ? 0 : static_cast<int>(steps.front().zone_f.size());
}

void EpisodeLog::validate() const {
  if (steps.empty()) return;
  const std::size_t zones = steps.front().zone_f.size();
  double dt = steps.size() > 1 ? steps[1].t_min - steps[0].t_min : 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.zone_f.size() != zones || s.vav.size() != zones ||
        s.phys.size() != zones)
      throw std::runtime_error("log: arity changes at step " + std::to_string(i));
    if (i > 0 && std::abs(steps[i].t_min - steps[i - 1].t_min - dt) > 1e-9)
      throw std::runtime_error("log: time grid not uniform at step " +
                               std::to_string(i));
  }
}

void write_episode_csv(const EpisodeLog& log, const std::string& path) {
  log.validate();
  if (log.zone_count() != 6 && !log.steps.empty())
    throw std::runtime_error("log: CSV schema is fixed at 6 zones, got " +
                             std::to_string(log.zone_count()));
  std::ofstream f(path);
  if (!f) throw std::runtime_error("log: cannot open " + path + " for writing");
  f << kHeader << "\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const auto& s : log.steps) {
    f << num(s.t_min) << ',' << num(s.outdoor_f);
    for (double t : s.zone_f) f << ',' << num(t);
    for (int v : s.vav) f << ',' << v;
    for (int p : s.phys) f << ',' << p;
    f << ',' << num(s.energy_j) << ',' << num(s.reward.l_t) << ','
      << num(s.reward.l_e) << ',' << num(s.reward.l_s) << ','
      << num(s.reward.total()) << ',' << (s.work ? 1 : 0) << "\n";
  }
  if (!f) throw std::runtime_error("log: write failed for " + path);
}

EpisodeLog load_episode_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("log: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != kHeader)
    throw std::runtime_error("log: " + path + ": unexpected header");
  EpisodeLog log;
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
        throw std::runtime_error("log: " + path + " line " +
                                 std::to_string(lineno) + ": bad number '" +
                                 cell + "'");
      vals.push_back(v);
    }
    if (vals.size() != kColumns)
      throw std::runtime_error("log: " + path + " line " +
                               std::to_string(lineno) + ": expected " +
                               std::to_string(kColumns) + " columns");
    StepRecord s;
    s.t_min = vals[0];
    s.outdoor_f = vals[1];
    s.zone_f.assign(vals.begin() + 2, vals.begin() + 8);
    for (int i = 0; i < 6; ++i) s.vav.push_back(static_cast<int>(vals[8 + i]));
    for (int i = 0; i < 6; ++i) s.phys.push_back(static_cast<int>(vals[14 + i]));
    s.energy_j = vals[20];
    s.reward = RewardBreakdown{vals[21], vals[22], vals[23]};
    s.work = vals[25] != 0.0;
    log.steps.push_back(std::move(s));
  }
  log.validate();
  return log;
}

}  // namespace vavsim
