#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "vavsim/mlp.hpp"

namespace vavsim {

using Rng = std::mt19937_64;

inline constexpr int kZoneCount = 6;
inline constexpr int kStateDim = 14;   // [O, W, T1..T6, V1..V6]
inline constexpr int kActionCount = 64;

// Zone temperature normalization range, F (matches the safe band).
inline constexpr double kZoneNormMinF = 60.0;
inline constexpr double kZoneNormMaxF = 90.0;

struct RawState {
  double outdoor_f = 0.0;
  bool work = false;
  std::array<double, kZoneCount> zone_f{};
  std::array<int, kZoneCount> vav{};  // logical status entering this step
};

// Min-max normalization over the operating ranges, clamped to [0, 1];
// flags pass through as 0/1.
std::vector<double> encode_state(const RawState& raw);

// Bit b of the action index is the logical action of zone b+1.
std::array<int, kZoneCount> decode_action(int action);

// Greedy with probability 1 - epsilon (ties to the lowest index), else
// uniform. epsilon <= 0 never touches the rng.
int select_action(std::span<const double> q, double epsilon, Rng& rng);

struct Transition {
  std::vector<double> state;
  int action = 0;
  double reward = 0.0;
  std::vector<double> next_state;
};

class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::size_t minimal_size);
  void push(Transition t);  // evicts oldest beyond capacity
  bool ready() const { return size() >= minimal_; }
  // Uniform with replacement; throws below minimal_size.
  std::vector<Transition> sample(std::size_t batch, Rng& rng) const;
  std::size_t size() const { return ring_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t minimal_size() const { return minimal_; }
  const Transition& at(std::size_t i) const;  // 0 = oldest surviving

 private:
  std::vector<Transition> ring_;
  std::size_t capacity_;
  std::size_t minimal_;
  std::size_t head_ = 0;  // next slot to overwrite once full
};

struct Hyperparams {
  double learning_rate = 0.001;
  double gamma = 0.9;
  double epsilon = 0.1;
  int batch_size = 128;
  int target_update = 200;      // train steps between target syncs
  int epochs = 20;
  std::size_t buffer_capacity = 10000;
  std::size_t buffer_minimal = 200;
  double grad_clip_norm = 10.0;
  std::uint64_t seed = 0;
  void validate() const;
};

double td_target(double reward, std::span<const double> next_state,
                 const Mlp& target_net, double gamma);

// One SGD update of net toward the TD targets built from target_net.
// Returns the batch loss; target_net is untouched.
double train_step(Mlp& net, const Mlp& target_net,
                  const std::vector<Transition>& batch,
                  const Hyperparams& hyper);

void sync_target(const Mlp& net, Mlp& target_net);

// The control network: 14 -> 128 -> 128 -> 128 -> 64.
Mlp make_q_network(std::uint64_t seed);

}  // namespace vavsim
