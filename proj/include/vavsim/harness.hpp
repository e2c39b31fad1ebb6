#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vavsim/agent.hpp"
#include "vavsim/config.hpp"
#include "vavsim/log.hpp"
#include "vavsim/metrics.hpp"
#include "vavsim/reward.hpp"
#include "vavsim/schedule.hpp"
#include "vavsim/thermal.hpp"
#include "vavsim/weather.hpp"

namespace vavsim {

enum class RewardKind { Heuristic, Binary };
enum class PolicyKind { Dqn, Rbc, AlwaysOn, AlwaysOff };

inline constexpr double kInitialZoneF = 72.0;

struct RunConfig {
  BuildingConfig building;
  std::vector<WeatherSample> weather;  // one more sample than steps
  int step_minutes = 12;
  int duration_days = 30;
  RewardWeights weights;
  Hyperparams hyper;
  RewardKind reward_kind = RewardKind::Heuristic;

  int total_steps() const { return duration_days * 1440 / step_minutes; }
  void validate() const;
};

// One fixed-length episode over prepared weather. Zone count is fixed at 6.
class Simulation {
 public:
  Simulation(BuildingConfig building, std::vector<WeatherSample> weather,
             int step_minutes, RewardWeights weights, RewardKind kind);

  void reset();
  int total_steps() const { return static_cast<int>(weather_.size()) - 1; }
  bool done() const { return static_cast<int>(index_) >= total_steps(); }
  double clock_min() const { return state_.clock_min; }
  double energy_scale_step() const { return e_scale_; }

  RawState observe() const;
  const StepRecord& apply(const std::array<int, kZoneCount>& action);
  const EpisodeLog& log() const { return log_; }

 private:
  BuildingConfig cfg_;
  std::vector<WeatherSample> weather_;
  int step_minutes_;
  RewardWeights weights_;
  RewardKind kind_;
  double e_scale_ = 0.0;
  ThermalState state_;
  std::vector<VavStatus> status_;
  std::array<int, kZoneCount> prev_logical_{};
  EpisodeLog log_;
  std::size_t index_ = 0;
};

struct RunSummary {
  double ccr = 0.0;
  double cvr = 0.0;
  double ccr_full = 0.0;
  double total_energy_j = 0.0;
  HomogeneityStats homogeneity;
  long transitions = 0;
  double total_reward = 0.0;
  double saving_pct = std::numeric_limits<double>::quiet_NaN();
};

RunSummary summarize(const EpisodeLog& log, const BandsF& bands);
void write_summary_csv(const RunSummary& summary, const std::string& path);
void write_summary_txt(const RunSummary& summary, const std::string& path);

struct TrainResult {
  Mlp net;
  std::vector<EpisodeLog> epoch_logs;
  std::vector<double> epoch_rewards;  // summed step rewards per epoch
};

TrainResult run_training(const RunConfig& config);

EpisodeLog run_eval(const RunConfig& config, const Mlp* net, PolicyKind policy);

struct PlanComparison {
  RunSummary first;
  RunSummary second;
};

// Both buildings must share zone geometry; couplings may differ only in kind
// and transfer coefficients, joining the same zone pairs over the same areas.
PlanComparison compare_plans(const RunConfig& first, const BuildingConfig& second,
                             PolicyKind policy, const Mlp* net = nullptr);

struct SweepSpec {
  enum class Axis { EtaRatio, EtaS };
  Axis axis = Axis::EtaRatio;
  std::vector<std::string> ratio_cells;  // "E:T" pairs, EtaRatio axis
  std::vector<double> eta_s_values;      // EtaS axis
  int repeats = 1;                       // seeds per cell
  void validate() const;
};

struct SweepCell {
  std::string cell;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double electricity_mj = 0.0;
  double saving_pct = 0.0;
  double violation_pct = 0.0;
  long transitions = 0;
};

// Trains one DQN per (cell, seed) and evaluates it greedily against RBC on
// the same weather. Cell failures are recorded and the sweep continues.
std::vector<SweepCell> run_sweep(const SweepSpec& spec, const RunConfig& base);
void write_sweep_csv(const std::vector<SweepCell>& cells,
                     const std::string& path);

}  // namespace vavsim
