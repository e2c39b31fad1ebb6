#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vavsim/harness.hpp"
#include "vavsim/units.hpp"

namespace fs = std::filesystem;
using namespace vavsim;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string weather_spec = "profile:SC_Greenville";
  std::uint64_t weather_seed = 1;
  int step_minutes = 12;
  int duration_days = 30;
  double eta_t = 1.0;
  double eta_e = 1.0;
  double eta_s = 1.0;
  std::string reward = "heuristic";
  Hyperparams hyper;
  std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_training) {
  cmd->add_option("--config", o.config_path, "building description (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--weather", o.weather_spec,
                  "weather source, profile:NAME or csv:PATH");
  cmd->add_option("--weather-seed", o.weather_seed, "seed for generated weather");
  cmd->add_option("--step", o.step_minutes, "step length in minutes");
  cmd->add_option("--days", o.duration_days, "episode length in days");
  cmd->add_option("--eta-t", o.eta_t, "comfort weight");
  cmd->add_option("--eta-e", o.eta_e, "energy weight");
  cmd->add_option("--eta-s", o.eta_s, "switching weight");
  cmd->add_option("--reward", o.reward, "comfort term form, heuristic or binary");
  cmd->add_option("--seed", o.hyper.seed, "training seed");
  cmd->add_option("--out", o.out_dir, "output directory");
  if (with_training) {
    cmd->add_option("--lr", o.hyper.learning_rate, "SGD learning rate");
    cmd->add_option("--gamma", o.hyper.gamma, "discount factor");
    cmd->add_option("--epsilon", o.hyper.epsilon, "exploration rate");
    cmd->add_option("--batch", o.hyper.batch_size, "minibatch size");
    cmd->add_option("--target-update", o.hyper.target_update,
                    "train steps between target network syncs");
    cmd->add_option("--epochs", o.hyper.epochs, "training episodes");
    cmd->add_option("--buffer", o.hyper.buffer_capacity, "replay capacity");
    cmd->add_option("--buffer-min", o.hyper.buffer_minimal,
                    "replay fill before training starts");
    cmd->add_option("--grad-clip", o.hyper.grad_clip_norm,
                    "gradient norm clip threshold");
  }
}

std::vector<WeatherSample> make_weather(const CommonOpts& o) {
  const std::size_t want =
      static_cast<std::size_t>(o.duration_days) * 1440 / o.step_minutes + 1;
  if (o.weather_spec.rfind("profile:", 0) == 0) {
    const std::string name = o.weather_spec.substr(8);
    const WeatherProfile* p = find_profile(name);
    if (p == nullptr) {
      std::string known;
      for (const auto& q : builtin_profiles()) known += " " + q.name;
      throw std::runtime_error("unknown weather profile '" + name +
                               "'; available:" + known);
    }
    return generate_weather(*p, o.duration_days, o.step_minutes, o.weather_seed);
  }
  if (o.weather_spec.rfind("csv:", 0) == 0) {
    std::vector<WeatherSample> w = load_weather_csv(o.weather_spec.substr(4));
    if (w.size() < want) {
      throw std::runtime_error("weather file has " + std::to_string(w.size()) +
                               " samples, need " + std::to_string(want));
    }
    w.resize(want);
    return w;
  }
  throw std::runtime_error("--weather must start with profile: or csv:");
}

RunConfig build_run_config(const CommonOpts& o) {
  RunConfig cfg;
  cfg.building = load_building_config(o.config_path);
  for (const auto& w : cfg.building.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  cfg.weather = make_weather(o);
  cfg.step_minutes = o.step_minutes;
  cfg.duration_days = o.duration_days;
  cfg.weights.eta_t = o.eta_t;
  cfg.weights.eta_e = o.eta_e;
  cfg.weights.eta_s = o.eta_s;
  cfg.hyper = o.hyper;
  if (o.reward == "heuristic") {
    cfg.reward_kind = RewardKind::Heuristic;
  } else if (o.reward == "binary") {
    cfg.reward_kind = RewardKind::Binary;
  } else {
    throw std::runtime_error("--reward must be heuristic or binary");
  }
  cfg.validate();
  return cfg;
}

fs::path out_file(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  return fs::path(o.out_dir) / name;
}

void write_epoch_rewards(const std::vector<double>& rewards,
                         const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "epoch,total_reward\n";
  char buf[64];
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, rewards[i]);
    out << buf;
  }
}

void run_train(const CommonOpts& o) {
  RunConfig cfg = build_run_config(o);
  write_weather_csv(cfg.weather, out_file(o, "weather.csv").string());
  TrainResult result = run_training(cfg);
  result.net.save(out_file(o, "weights.bin").string());
  write_epoch_rewards(result.epoch_rewards, out_file(o, "training_rewards.csv"));

  const EpisodeLog dqn = run_eval(cfg, &result.net, PolicyKind::Dqn);
  const EpisodeLog rbc = run_eval(cfg, nullptr, PolicyKind::Rbc);
  write_episode_csv(dqn, out_file(o, "eval_dqn.csv").string());
  write_episode_csv(rbc, out_file(o, "eval_rbc.csv").string());

  RunSummary sd = summarize(dqn, cfg.building.bands_f);
  sd.saving_pct = energy_saving_ratio(dqn, rbc);
  RunSummary sr = summarize(rbc, cfg.building.bands_f);
  write_summary_csv(sd, out_file(o, "summary_dqn.csv").string());
  write_summary_txt(sd, out_file(o, "summary_dqn.txt").string());
  write_summary_csv(sr, out_file(o, "summary_rbc.csv").string());
  write_summary_txt(sr, out_file(o, "summary_rbc.txt").string());

  std::printf("trained %d epochs, final epoch reward %.4f\n",
              static_cast<int>(result.epoch_rewards.size()),
              result.epoch_rewards.empty() ? 0.0 : result.epoch_rewards.back());
  std::printf("greedy policy: %.3f MJ, CVR %.4f, saving vs schedule %.2f%%\n",
              sd.total_energy_j / 1e6, sd.cvr, sd.saving_pct);
  std::printf("outputs in %s\n", o.out_dir.c_str());
}

PolicyKind parse_policy(const std::string& name) {
  if (name == "dqn") return PolicyKind::Dqn;
  if (name == "rbc") return PolicyKind::Rbc;
  if (name == "always-on") return PolicyKind::AlwaysOn;
  if (name == "always-off") return PolicyKind::AlwaysOff;
  throw std::runtime_error("--policy must be dqn, rbc, always-on or always-off");
}

void run_eval_cmd(const CommonOpts& o, const std::string& policy_name,
                  const std::string& weights_path) {
  RunConfig cfg = build_run_config(o);
  const PolicyKind policy = parse_policy(policy_name);
  Mlp net = make_q_network(0);
  const Mlp* net_ptr = nullptr;
  if (policy == PolicyKind::Dqn) {
    if (weights_path.empty()) {
      throw std::runtime_error("--weights is required with --policy dqn");
    }
    net = Mlp::load(weights_path);
    net_ptr = &net;
  }
  const EpisodeLog log = run_eval(cfg, net_ptr, policy);
  write_episode_csv(log, out_file(o, "eval.csv").string());
  RunSummary s = summarize(log, cfg.building.bands_f);
  if (policy != PolicyKind::Rbc) {
    const EpisodeLog rbc = run_eval(cfg, nullptr, PolicyKind::Rbc);
    write_episode_csv(rbc, out_file(o, "eval_rbc.csv").string());
    s.saving_pct = energy_saving_ratio(log, rbc);
  }
  write_summary_csv(s, out_file(o, "summary.csv").string());
  write_summary_txt(s, out_file(o, "summary.txt").string());
  std::printf("%s: %.3f MJ, CCR %.4f, transitions %ld\n", policy_name.c_str(),
              s.total_energy_j / 1e6, s.ccr, s.transitions);
  std::printf("outputs in %s\n", o.out_dir.c_str());
}

void run_sweep_cmd(const CommonOpts& o, const std::string& axis_name,
                   const std::vector<std::string>& cells,
                   const std::vector<double>& values, int repeats) {
  RunConfig cfg = build_run_config(o);
  SweepSpec spec;
  if (axis_name == "ratio") {
    spec.axis = SweepSpec::Axis::EtaRatio;
    spec.ratio_cells = cells;
  } else if (axis_name == "switching") {
    spec.axis = SweepSpec::Axis::EtaS;
    spec.eta_s_values = values;
  } else {
    throw std::runtime_error("--axis must be ratio or switching");
  }
  spec.repeats = repeats;
  const std::vector<SweepCell> result = run_sweep(spec, cfg);
  write_sweep_csv(result, out_file(o, "sweep.csv").string());
  for (const auto& c : result) {
    if (c.ok) {
      std::printf("%-12s seed %llu: %.3f MJ, saving %.2f%%, violation %.2f%%, "
                  "%ld transitions\n",
                  c.cell.c_str(), static_cast<unsigned long long>(c.seed),
                  c.electricity_mj, c.saving_pct, c.violation_pct, c.transitions);
    } else {
      std::printf("%-12s seed %llu: FAILED (%s)\n", c.cell.c_str(),
                  static_cast<unsigned long long>(c.seed), c.error.c_str());
    }
  }
  std::printf("outputs in %s\n", o.out_dir.c_str());
}

void run_compare(const CommonOpts& o, const std::string& second_path,
                 const std::string& policy_name,
                 const std::string& weights_path) {
  RunConfig cfg = build_run_config(o);
  BuildingConfig second = load_building_config(second_path);
  for (const auto& w : second.warnings) std::cerr << "warning: " << w << '\n';
  const PolicyKind policy = parse_policy(policy_name);
  Mlp net = make_q_network(0);
  const Mlp* net_ptr = nullptr;
  if (policy == PolicyKind::Dqn) {
    if (weights_path.empty()) {
      throw std::runtime_error("--weights is required with --policy dqn");
    }
    net = Mlp::load(weights_path);
    net_ptr = &net;
  }
  const PlanComparison cmp = compare_plans(cfg, second, policy, net_ptr);
  std::ofstream out(out_file(o, "compare.csv"));
  out << "plan,total_MJ,ccr,mean_spread_F,mean_variance_F2,transitions\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%ld\n",
                cfg.building.name.c_str(), cmp.first.total_energy_j / 1e6,
                cmp.first.ccr, cmp.first.homogeneity.mean_range_f,
                cmp.first.homogeneity.mean_variance_f2, cmp.first.transitions);
  out << buf;
  std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%ld\n",
                second.name.c_str(), cmp.second.total_energy_j / 1e6,
                cmp.second.ccr, cmp.second.homogeneity.mean_range_f,
                cmp.second.homogeneity.mean_variance_f2, cmp.second.transitions);
  out << buf;
  std::printf("%s: %.3f MJ, spread %.3f F\n", cfg.building.name.c_str(),
              cmp.first.total_energy_j / 1e6, cmp.first.homogeneity.mean_range_f);
  std::printf("%s: %.3f MJ, spread %.3f F\n", second.name.c_str(),
              cmp.second.total_energy_j / 1e6, cmp.second.homogeneity.mean_range_f);
  std::printf("outputs in %s\n", o.out_dir.c_str());
}

void run_weather_gen(const std::string& profile_name, int days, int step,
                     std::uint64_t seed, const std::string& out_path) {
  const WeatherProfile* p = find_profile(profile_name);
  if (p == nullptr) {
    std::string known;
    for (const auto& q : builtin_profiles()) known += " " + q.name;
    throw std::runtime_error("unknown weather profile '" + profile_name +
                             "'; available:" + known);
  }
  const std::vector<WeatherSample> w = generate_weather(*p, days, step, seed);
  write_weather_csv(w, out_path);
  std::printf("wrote %zu samples to %s\n", w.size(), out_path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-zone VAV office simulator with a learned on/off controller"};
  app.require_subcommand(1);

  CommonOpts train_opts;
  auto* train = app.add_subcommand("train", "train the controller, then evaluate it");
  add_common(train, train_opts, true);

  CommonOpts eval_opts;
  std::string eval_policy = "dqn";
  std::string eval_weights;
  auto* eval = app.add_subcommand("eval", "run one policy over one episode");
  add_common(eval, eval_opts, false);
  eval->add_option("--policy", eval_policy, "dqn, rbc, always-on or always-off");
  eval->add_option("--weights", eval_weights, "saved network weights");

  CommonOpts sweep_opts;
  std::string sweep_axis = "ratio";
  std::vector<std::string> sweep_cells;
  std::vector<double> sweep_values;
  int sweep_repeats = 1;
  auto* sweep = app.add_subcommand("sweep", "train across a weight grid");
  add_common(sweep, sweep_opts, true);
  sweep->add_option("--axis", sweep_axis, "ratio (energy:comfort) or switching");
  sweep->add_option("--cells", sweep_cells, "E:T cells for the ratio axis")
      ->delimiter(',');
  sweep->add_option("--values", sweep_values, "weights for the switching axis")
      ->delimiter(',');
  sweep->add_option("--repeats", sweep_repeats, "seeds per cell");

  CommonOpts cmp_opts;
  std::string cmp_second;
  std::string cmp_policy = "rbc";
  std::string cmp_weights;
  auto* cmp = app.add_subcommand("compare-plans",
                                 "evaluate one policy on two floor plans");
  add_common(cmp, cmp_opts, false);
  cmp->add_option("--config2", cmp_second, "second building description")
      ->required()
      ->check(CLI::ExistingFile);
  cmp->add_option("--policy", cmp_policy, "dqn, rbc, always-on or always-off");
  cmp->add_option("--weights", cmp_weights, "saved network weights");

  std::string wg_profile = "SC_Greenville";
  int wg_days = 30;
  int wg_step = 12;
  std::uint64_t wg_seed = 1;
  std::string wg_out = "weather.csv";
  auto* wg = app.add_subcommand("weather-gen", "write a synthetic weather file");
  wg->add_option("--profile", wg_profile, "climate profile name");
  wg->add_option("--days", wg_days, "length in days");
  wg->add_option("--step", wg_step, "sample spacing in minutes");
  wg->add_option("--seed", wg_seed, "noise seed");
  wg->add_option("--out", wg_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train->parsed()) run_train(train_opts);
    if (eval->parsed()) run_eval_cmd(eval_opts, eval_policy, eval_weights);
    if (sweep->parsed()) {
      run_sweep_cmd(sweep_opts, sweep_axis, sweep_cells, sweep_values,
                    sweep_repeats);
    }
    if (cmp->parsed()) run_compare(cmp_opts, cmp_second, cmp_policy, cmp_weights);
    if (wg->parsed()) run_weather_gen(wg_profile, wg_days, wg_step, wg_seed, wg_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
