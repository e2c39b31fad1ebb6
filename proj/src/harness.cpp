#include "vavsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "vavsim/units.hpp"

namespace vavsim {
namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("harness: " + msg);
}

constexpr std::array<int, 7> kStepChoices{5, 10, 12, 15, 20, 30, 60};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  building.validate();
  if (std::find(kStepChoices.begin(), kStepChoices.end(), step_minutes) ==
      kStepChoices.end()) {
    fail("step_minutes must be one of 5, 10, 12, 15, 20, 30, 60; got " +
         std::to_string(step_minutes));
  }
  if (duration_days < 1) fail("duration_days must be at least 1");
  weights.validate();
  hyper.validate();
  const std::size_t want = static_cast<std::size_t>(total_steps()) + 1;
  if (weather.size() != want) {
    fail("weather has " + std::to_string(weather.size()) + " samples, need " +
         std::to_string(want) + " for " + std::to_string(duration_days) +
         " days at " + std::to_string(step_minutes) + " min steps");
  }
  for (std::size_t i = 0; i + 1 < weather.size(); ++i) {
    const double dt = weather[i + 1].minutes - weather[i].minutes;
    if (std::fabs(dt - step_minutes) > 1e-9) {
      fail("weather sample spacing " + fmt(dt) + " min at index " +
           std::to_string(i) + " does not match step_minutes");
    }
  }
  // Reject step sizes the explicit integrator cannot take.
  std::vector<double> flows;
  flows.reserve(building.vavs.size());
  for (const auto& vav : building.vavs) flows.push_back(vav.mass_flow_on);
  check_step_stability(building.model, flows, step_minutes * 60.0);
}

Simulation::Simulation(BuildingConfig building, std::vector<WeatherSample> weather,
                       int step_minutes, RewardWeights weights, RewardKind kind)
    : cfg_(std::move(building)),
      weather_(std::move(weather)),
      step_minutes_(step_minutes),
      weights_(weights),
      kind_(kind) {
  cfg_.validate();
  weights_.validate();
  if (weather_.size() < 2) fail("simulation needs at least two weather samples");
  if (cfg_.model.zones.size() != kZoneCount) {
    fail("simulation requires exactly " + std::to_string(kZoneCount) + " zones");
  }
  const double dt_s = step_minutes_ * 60.0;
  for (const auto& vav : cfg_.vavs) {
    e_scale_ += max_electric_power(vav, cfg_.model.air_specific_heat, cfg_.bands) * dt_s;
  }
  reset();
}

void Simulation::reset() {
  state_.zone_temps_k.assign(kZoneCount, fahrenheit_to_kelvin(kInitialZoneF));
  state_.clock_min = 0.0;
  status_.assign(kZoneCount, VavStatus{});
  prev_logical_.fill(0);
  log_.steps.clear();
  index_ = 0;
}

RawState Simulation::observe() const {
  RawState raw;
  raw.outdoor_f = kelvin_to_fahrenheit(weather_[index_].outdoor_k);
  raw.work = cfg_.schedule.is_work(state_.clock_min);
  for (std::size_t i = 0; i < kZoneCount; ++i) {
    raw.zone_f[i] = kelvin_to_fahrenheit(state_.zone_temps_k[i]);
    raw.vav[i] = prev_logical_[i];
  }
  return raw;
}

const StepRecord& Simulation::apply(const std::array<int, kZoneCount>& action) {
  if (done()) fail("apply called past the end of the episode");
  const WeatherSample& now = weather_[index_];
  const double dt_s = step_minutes_ * 60.0;
  const bool work = cfg_.schedule.is_work(state_.clock_min);

  std::vector<ZoneFlow> flows(kZoneCount);
  std::array<PhysicalCommand, kZoneCount> cmds{};
  double energy_j = 0.0;
  for (std::size_t i = 0; i < kZoneCount; ++i) {
    cmds[i] = translate_action(action[i], state_.zone_temps_k[i], cfg_.bands,
                               status_[i].physical);
    flows[i] = plant_output(cmds[i], cfg_.vavs[i]);
    energy_j += electric_energy(cmds[i], cfg_.vavs[i], cfg_.model.air_specific_heat,
                                state_.zone_temps_k[i], dt_s);
  }

  ThermalState next = step(cfg_.model, state_, now, flows, work, dt_s);

  StepRecord rec;
  rec.t_min = state_.clock_min;
  rec.outdoor_f = kelvin_to_fahrenheit(now.outdoor_k);
  rec.zone_f.resize(kZoneCount);
  rec.vav.resize(kZoneCount);
  rec.phys.resize(kZoneCount);
  for (std::size_t i = 0; i < kZoneCount; ++i) {
    rec.zone_f[i] = kelvin_to_fahrenheit(next.zone_temps_k[i]);
    rec.vav[i] = action[i];
    rec.phys[i] = cmds[i] == PhysicalCommand::HeatOn   ? 1
                  : cmds[i] == PhysicalCommand::CoolOn ? -1
                                                       : 0;
  }
  rec.energy_j = energy_j;
  rec.work = work;

  if (kind_ == RewardKind::Heuristic) {
    rec.reward.l_t = comfort_loss(rec.zone_f, weights_, cfg_.bands_f, work);
  } else {
    // Binary mode swaps only the graded comfort term; the hard safety
    // penalty still applies around the clock.
    RewardWeights safety_only = weights_;
    safety_only.eta_t = 0.0;
    rec.reward.l_t = comfort_loss(rec.zone_f, safety_only, cfg_.bands_f, false);
    if (work) rec.reward.l_t += binary_comfort_loss(rec.zone_f, cfg_.bands_f);
  }
  rec.reward.l_e = energy_loss(energy_j, weights_, e_scale_);
  rec.reward.l_s = smoothness_loss(rec.vav, std::vector<int>(prev_logical_.begin(), prev_logical_.end()),
                                   weights_);

  log_.steps.push_back(std::move(rec));
  state_ = std::move(next);
  for (std::size_t i = 0; i < kZoneCount; ++i) {
    status_[i].logical = action[i];
    status_[i].physical = cmds[i];
  }
  prev_logical_ = action;
  ++index_;
  return log_.steps.back();
}

RunSummary summarize(const EpisodeLog& log, const BandsF& bands) {
  RunSummary s;
  s.ccr = ccr(log, bands);
  s.cvr = 1.0 - s.ccr;
  s.ccr_full = ccr_all_steps(log, bands);
  s.total_energy_j = total_energy_j(log);
  s.homogeneity = homogeneity_stats(log);
  s.transitions = transition_count(log);
  for (const auto& rec : log.steps) s.total_reward += rec.reward.total();
  return s;
}

void write_summary_csv(const RunSummary& summary, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  out << "ccr,cvr,ccr_all_steps,total_MJ,saving_pct,delta_T_F,sigma2_T_F2,"
         "transitions,total_reward\n";
  out << fmt(summary.ccr) << ',' << fmt(summary.cvr) << ','
      << fmt(summary.ccr_full) << ',' << fmt(summary.total_energy_j / 1e6) << ',';
  if (std::isfinite(summary.saving_pct)) out << fmt(summary.saving_pct);
  out << ',' << fmt(summary.homogeneity.mean_range_f) << ','
      << fmt(summary.homogeneity.mean_variance_f2) << ',' << summary.transitions
      << ',' << fmt(summary.total_reward) << '\n';
  if (!out) fail("write failed for " + path);
}

void write_summary_txt(const RunSummary& summary, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  char buf[256];
  std::snprintf(buf, sizeof buf, "comfort compliance ratio: %.4f\n", summary.ccr);
  out << buf;
  std::snprintf(buf, sizeof buf, "comfort violation ratio:  %.4f\n", summary.cvr);
  out << buf;
  std::snprintf(buf, sizeof buf, "total electricity:        %.3f MJ\n",
                summary.total_energy_j / 1e6);
  out << buf;
  if (std::isfinite(summary.saving_pct)) {
    std::snprintf(buf, sizeof buf, "saving vs baseline:       %.2f %%\n",
                  summary.saving_pct);
    out << buf;
  } else {
    out << "saving vs baseline:       n/a\n";
  }
  std::snprintf(buf, sizeof buf, "mean zone spread:         %.3f F\n",
                summary.homogeneity.mean_range_f);
  out << buf;
  std::snprintf(buf, sizeof buf, "mean zone variance:       %.4f F^2\n",
                summary.homogeneity.mean_variance_f2);
  out << buf;
  std::snprintf(buf, sizeof buf, "switch transitions:       %ld\n",
                summary.transitions);
  out << buf;
  std::snprintf(buf, sizeof buf, "total reward:             %.4f\n",
                summary.total_reward);
  out << buf;
  if (!out) fail("write failed for " + path);
}

TrainResult run_training(const RunConfig& config) {
  config.validate();
  TrainResult result{make_q_network(config.hyper.seed), {}, {}};
  Mlp target = result.net;
  Rng rng(config.hyper.seed ^ 0x9E3779B97F4A7C15ull);
  ReplayBuffer buffer(config.hyper.buffer_capacity, config.hyper.buffer_minimal);
  Simulation sim(config.building, config.weather, config.step_minutes,
                 config.weights, config.reward_kind);

  long train_steps = 0;
  for (int epoch = 0; epoch < config.hyper.epochs; ++epoch) {
    sim.reset();
    std::vector<double> state = encode_state(sim.observe());
    int step_no = 0;
    while (!sim.done()) {
      const std::vector<double> q = result.net.forward(state);
      const int action = select_action(q, config.hyper.epsilon, rng);
      double reward = 0.0;
      try {
        reward = sim.apply(decode_action(action)).reward.total();
      } catch (const std::exception& e) {
        fail("epoch " + std::to_string(epoch) + " step " +
             std::to_string(step_no) + ": " + e.what());
      }
      std::vector<double> next = encode_state(sim.observe());
      buffer.push({state, action, reward, next});
      if (buffer.ready()) {
        try {
          train_step(result.net, target, buffer.sample(config.hyper.batch_size, rng),
                     config.hyper);
        } catch (const std::exception& e) {
          fail("epoch " + std::to_string(epoch) + " step " +
               std::to_string(step_no) + ": " + e.what());
        }
        ++train_steps;
        if (train_steps % config.hyper.target_update == 0) {
          sync_target(result.net, target);
        }
      }
      state = std::move(next);
      ++step_no;
    }
    result.epoch_logs.push_back(sim.log());
    double total = 0.0;
    for (const auto& rec : sim.log().steps) total += rec.reward.total();
    result.epoch_rewards.push_back(total);
  }
  return result;
}

EpisodeLog run_eval(const RunConfig& config, const Mlp* net, PolicyKind policy) {
  config.validate();
  if (policy == PolicyKind::Dqn && net == nullptr) {
    fail("evaluation with the learned policy needs trained network weights");
  }
  Simulation sim(config.building, config.weather, config.step_minutes,
                 config.weights, config.reward_kind);
  Rng unused(0);
  while (!sim.done()) {
    std::array<int, kZoneCount> bits{};
    switch (policy) {
      case PolicyKind::Dqn: {
        const std::vector<double> q = net->forward(encode_state(sim.observe()));
        bits = decode_action(select_action(q, 0.0, unused));
        break;
      }
      case PolicyKind::Rbc:
        bits = rbc_policy(sim.clock_min(), config.building.schedule);
        break;
      case PolicyKind::AlwaysOn:
        bits = always_on_policy();
        break;
      case PolicyKind::AlwaysOff:
        bits = always_off_policy();
        break;
    }
    sim.apply(bits);
  }
  return sim.log();
}

namespace {

struct CouplingKey {
  int a;
  int b;
  double area;
  bool operator<(const CouplingKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return area < o.area;
  }
};

std::vector<CouplingKey> coupling_keys(const BuildingModel& model) {
  std::vector<CouplingKey> keys;
  for (const auto& c : model.couplings) {
    keys.push_back({std::min(c.zone_a, c.zone_b), std::max(c.zone_a, c.zone_b),
                    c.surface_area});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool same_geometry(const BuildingModel& a, const BuildingModel& b) {
  if (a.zones.size() != b.zones.size()) return false;
  for (std::size_t i = 0; i < a.zones.size(); ++i) {
    const ZoneSpec& za = a.zones[i];
    const ZoneSpec& zb = b.zones[i];
    if (za.id != zb.id || za.floor_area != zb.floor_area ||
        za.height != zb.height || za.window_area != zb.window_area ||
        za.window_absorptance != zb.window_absorptance ||
        za.thermal_mass_multiplier != zb.thermal_mass_multiplier ||
        za.internal_gain_occupied != zb.internal_gain_occupied ||
        za.internal_gain_vacant != zb.internal_gain_vacant) {
      return false;
    }
  }
  const auto ka = coupling_keys(a);
  const auto kb = coupling_keys(b);
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (kb[i].a != ka[i].a || kb[i].b != ka[i].b || kb[i].area != ka[i].area) {
      return false;
    }
  }
  return true;
}

}  // namespace

PlanComparison compare_plans(const RunConfig& first, const BuildingConfig& second,
                             PolicyKind policy, const Mlp* net) {
  first.validate();
  second.validate();
  if (!same_geometry(first.building.model, second.model)) {
    fail("plan comparison requires identical zone geometry and coupling "
         "areas; the two buildings may differ only in partition heat "
         "transfer");
  }
  PlanComparison out;
  out.first = summarize(run_eval(first, net, policy), first.building.bands_f);
  RunConfig other = first;
  other.building = second;
  out.second = summarize(run_eval(other, net, policy), second.bands_f);
  return out;
}

void SweepSpec::validate() const {
  if (repeats < 1) fail("sweep repeats must be at least 1");
  if (axis == Axis::EtaRatio && ratio_cells.empty()) {
    fail("weight-ratio sweep needs at least one E:T cell");
  }
  if (axis == Axis::EtaS && eta_s_values.empty()) {
    fail("switching-weight sweep needs at least one value");
  }
}

namespace {

std::pair<double, double> parse_ratio(const std::string& cell) {
  const auto colon = cell.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == cell.size()) {
    fail("weight ratio cell must look like E:T; got '" + cell + "'");
  }
  std::size_t used = 0;
  double e = 0.0;
  double t = 0.0;
  try {
    e = std::stod(cell.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    const std::string rest = cell.substr(colon + 1);
    t = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail("weight ratio cell must hold two numbers; got '" + cell + "'");
  }
  if (e <= 0.0 || t <= 0.0) fail("weight ratio parts must be positive");
  return {e, t};
}

}  // namespace

std::vector<SweepCell> run_sweep(const SweepSpec& spec, const RunConfig& base) {
  spec.validate();
  base.validate();
  std::vector<SweepCell> cells;
  const std::size_t n = spec.axis == SweepSpec::Axis::EtaRatio
                            ? spec.ratio_cells.size()
                            : spec.eta_s_values.size();
  for (std::size_t i = 0; i < n; ++i) {
    RunConfig cfg = base;
    std::string label;
    if (spec.axis == SweepSpec::Axis::EtaRatio) {
      label = spec.ratio_cells[i];
      const auto [e, t] = parse_ratio(label);
      cfg.weights.eta_e = e;
      cfg.weights.eta_t = t;
    } else {
      cfg.weights.eta_s = spec.eta_s_values[i];
      label = "eta_s=" + fmt(spec.eta_s_values[i]);
    }
    for (int r = 0; r < spec.repeats; ++r) {
      SweepCell cell;
      cell.cell = label;
      cell.seed = base.hyper.seed + static_cast<std::uint64_t>(r);
      cfg.hyper.seed = cell.seed;
      try {
        TrainResult trained = run_training(cfg);
        const EpisodeLog dqn = run_eval(cfg, &trained.net, PolicyKind::Dqn);
        const EpisodeLog rbc = run_eval(cfg, nullptr, PolicyKind::Rbc);
        cell.electricity_mj = total_energy_j(dqn) / 1e6;
        cell.saving_pct = energy_saving_ratio(dqn, rbc);
        cell.violation_pct = 100.0 * (1.0 - ccr(dqn, cfg.building.bands_f));
        cell.transitions = transition_count(dqn);
        cell.ok = true;
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_sweep_csv(const std::vector<SweepCell>& cells,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  out << "cell,seed,ok,electricity_MJ,saving_pct,violation_pct,transitions,error\n";
  for (const auto& c : cells) {
    std::string err = c.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out << c.cell << ',' << c.seed << ',' << (c.ok ? 1 : 0) << ','
        << fmt(c.electricity_mj) << ',' << fmt(c.saving_pct) << ','
        << fmt(c.violation_pct) << ',' << c.transitions << ',' << err << '\n';
  }
  if (!out) fail("write failed for " + path);
}

}  // namespace vavsim
