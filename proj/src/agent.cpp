#include "vavsim/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vavsim/weather.hpp"

namespace vavsim {

namespace {

double norm_clamped(double v, double lo, double hi) {
  return std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
}

}  // namespace

std::vector<double> encode_state(const RawState& raw) {
  std::vector<double> s;
  s.reserve(kStateDim);
  s.push_back(norm_clamped(raw.outdoor_f, kOutdoorMinF, kOutdoorMaxF));
  s.push_back(raw.work ? 1.0 : 0.0);
  for (double t : raw.zone_f)
    s.push_back(norm_clamped(t, kZoneNormMinF, kZoneNormMaxF));
  for (int v : raw.vav) s.push_back(v != 0 ? 1.0 : 0.0);
  return s;
}

std::array<int, kZoneCount> decode_action(int action) {
  if (action < 0 || action >= kActionCount)
    throw std::runtime_error("agent: action index out of range");
  std::array<int, kZoneCount> bits{};
  for (int b = 0; b < kZoneCount; ++b) bits[b] = (action >> b) & 1;
  return bits;
}

int select_action(std::span<const double> q, double epsilon, Rng& rng) {
  if (q.size() != kActionCount)
    throw std::runtime_error("agent: expected 64 action values");
  if (epsilon > 0.0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < epsilon) {
      std::uniform_int_distribution<int> pick(0, kActionCount - 1);
      return pick(rng);
    }
  }
  int best = 0;
  for (int a = 1; a < kActionCount; ++a)
    if (q[a] > q[best]) best = a;
  return best;
}

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::size_t minimal_size)
    : capacity_(capacity), minimal_(minimal_size) {
  if (capacity == 0) throw std::runtime_error("replay: capacity must be positive");
  if (minimal_size == 0 || minimal_size > capacity)
    throw std::runtime_error("replay: need 0 < minimal_size <= capacity");
  ring_.reserve(std::min<std::size_t>(capacity, 1 << 14));
}

void ReplayBuffer::push(Transition t) {
  if (ring_.size() < capacity_) {
    ring_.push_back(std::move(t));
    return;
  }
  ring_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

std::vector<Transition> ReplayBuffer::sample(std::size_t batch,
                                             Rng& rng) const {
  if (!ready())
    throw std::runtime_error("replay: buffer below minimal fill (" +
                             std::to_string(size()) + " < " +
                             std::to_string(minimal_) + ")");
  std::uniform_int_distribution<std::size_t> pick(0, ring_.size() - 1);
  std::vector<Transition> out;
  out.reserve(batch);
  for (std::size_t i = 0; i < batch; ++i) out.push_back(ring_[pick(rng)]);
  return out;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= ring_.size()) throw std::runtime_error("replay: index out of range");
  if (ring_.size() < capacity_) return ring_[i];
  return ring_[(head_ + i) % capacity_];
}

void Hyperparams::validate() const {
  if (!(learning_rate > 0.0))
    throw std::runtime_error("hyper: learning_rate must be positive");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::runtime_error("hyper: gamma must lie in [0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::runtime_error("hyper: epsilon must lie in [0, 1]");
  if (batch_size < 1) throw std::runtime_error("hyper: batch_size must be >= 1");
  if (target_update < 1)
    throw std::runtime_error("hyper: target_update must be >= 1");
  if (epochs < 1) throw std::runtime_error("hyper: epochs must be >= 1");
  if (buffer_minimal == 0 || buffer_minimal > buffer_capacity)
    throw std::runtime_error("hyper: need 0 < buffer_minimal <= buffer_capacity");
  if (!(grad_clip_norm > 0.0))
    throw std::runtime_error("hyper: grad_clip_norm must be positive");
}

double td_target(double reward, std::span<const double> next_state,
                 const Mlp& target_net, double gamma) {
  if (gamma == 0.0) return reward;
  const std::vector<double> q = target_net.forward(next_state);
  double best = q[0];
  for (double v : q) best = std::max(best, v);
  return reward + gamma * best;
}

double train_step(Mlp& net, const Mlp& target_net,
                  const std::vector<Transition>& batch,
                  const Hyperparams& hyper) {
  if (batch.empty()) throw std::runtime_error("agent: empty training batch");
  std::vector<std::vector<double>> inputs;
  std::vector<int> actions;
  std::vector<double> targets;
  inputs.reserve(batch.size());
  actions.reserve(batch.size());
  targets.reserve(batch.size());
  for (const auto& t : batch) {
    inputs.push_back(t.state);
    actions.push_back(t.action);
    targets.push_back(td_target(t.reward, t.next_state, target_net, hyper.gamma));
  }
  MlpGradients g = net.gradients(inputs, actions, targets);
  if (!std::isfinite(g.loss))
    throw std::runtime_error("agent: training diverged (non-finite loss)");
  const double norm = g.global_norm();
  if (norm > hyper.grad_clip_norm) g.scale(hyper.grad_clip_norm / norm);
  net.apply_update(g, hyper.learning_rate);
  return g.loss;
}

void sync_target(const Mlp& net, Mlp& target_net) { target_net = net; }

Mlp make_q_network(std::uint64_t seed) {
  return Mlp({kStateDim, 128, 128, 128, kActionCount}, seed);
}

}  // namespace vavsim
