#include "vavsim/mlp.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>

namespace vavsim {

namespace {

constexpr char kMagic[8] = {'V', 'A', 'V', 'Q', 'N', 'E', 'T', '1'};

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::runtime_error(std::string("mlp: ") + what);
}

}  // namespace

double MlpGradients::global_norm() const {
  double sq = 0.0;
  for (const auto& layer : weights)
    for (double g : layer) sq += g * g;
  for (const auto& layer : biases)
    for (double g : layer) sq += g * g;
  return std::sqrt(sq);
}

void MlpGradients::scale(double factor) {
  for (auto& layer : weights)
    for (double& g : layer) g *= factor;
  for (auto& layer : biases)
    for (double& g : layer) g *= factor;
}

Mlp::Mlp(std::vector<int> layer_sizes, std::uint64_t seed)
    : sizes_(std::move(layer_sizes)) {
  if (sizes_.size() < 2)
    throw std::runtime_error("mlp: need at least input and output layers");
  for (int s : sizes_)
    if (s < 1) throw std::runtime_error("mlp: layer sizes must be positive");
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const int fan_in = sizes_[l];
    const int fan_out = sizes_[l + 1];
    const double bound = std::sqrt(6.0 / (fan_in + fan_out));
    std::uniform_real_distribution<double> uniform(-bound, bound);
    std::vector<double> w(static_cast<std::size_t>(fan_in) * fan_out);
    for (double& v : w) v = uniform(rng);
    weights_.push_back(std::move(w));
    biases_.emplace_back(fan_out, 0.0);
  }
}

std::size_t Mlp::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights_.size(); ++l)
    n += weights_[l].size() + biases_[l].size();
  return n;
}

std::vector<double> Mlp::forward(std::span<const double> input) const {
  if (static_cast<int>(input.size()) != sizes_.front())
    throw std::runtime_error("mlp: input size mismatch");
  std::vector<double> act(input.begin(), input.end());
  std::vector<double> next;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    const int fan_in = sizes_[l];
    const int fan_out = sizes_[l + 1];
    const bool hidden = l + 1 < weights_.size();
    next.assign(fan_out, 0.0);
    const double* w = weights_[l].data();
    for (int o = 0; o < fan_out; ++o) {
      double sum = biases_[l][o];
      const double* row = w + static_cast<std::size_t>(o) * fan_in;
      for (int i = 0; i < fan_in; ++i) sum += row[i] * act[i];
      next[o] = hidden && sum < 0.0 ? 0.0 : sum;
    }
    act.swap(next);
  }
  return act;
}

MlpGradients Mlp::gradients(const std::vector<std::vector<double>>& inputs,
                            const std::vector<int>& actions,
                            const std::vector<double>& targets) const {
  const std::size_t batch = inputs.size();
  if (batch == 0) throw std::runtime_error("mlp: empty batch");
  if (actions.size() != batch || targets.size() != batch)
    throw std::runtime_error("mlp: batch arity mismatch");

  MlpGradients g;
  g.weights.reserve(weights_.size());
  g.biases.reserve(biases_.size());
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    g.weights.emplace_back(weights_[l].size(), 0.0);
    g.biases.emplace_back(biases_[l].size(), 0.0);
  }

  const std::size_t layers = weights_.size();
  // acts[0] is the input; acts[l + 1] the post-activation of layer l.
  std::vector<std::vector<double>> acts(layers + 1);
  std::vector<std::vector<double>> delta(layers);
  double loss = 0.0;

  for (std::size_t b = 0; b < batch; ++b) {
    const auto& x = inputs[b];
    if (static_cast<int>(x.size()) != sizes_.front())
      throw std::runtime_error("mlp: input size mismatch");
    const int action = actions[b];
    if (action < 0 || action >= sizes_.back())
      throw std::runtime_error("mlp: action index out of range");

    acts[0].assign(x.begin(), x.end());
    for (std::size_t l = 0; l < layers; ++l) {
      const int fan_in = sizes_[l];
      const int fan_out = sizes_[l + 1];
      const bool hidden = l + 1 < layers;
      acts[l + 1].assign(fan_out, 0.0);
      const double* w = weights_[l].data();
      const double* in = acts[l].data();
      for (int o = 0; o < fan_out; ++o) {
        double sum = biases_[l][o];
        const double* row = w + static_cast<std::size_t>(o) * fan_in;
        for (int i = 0; i < fan_in; ++i) sum += row[i] * in[i];
        acts[l + 1][o] = hidden && sum < 0.0 ? 0.0 : sum;
      }
    }

    const double diff = acts[layers][action] - targets[b];
    loss += diff * diff;

    // Output error is one-hot at the taken action.
    delta[layers - 1].assign(sizes_.back(), 0.0);
    delta[layers - 1][action] = 2.0 * diff / static_cast<double>(batch);

    for (std::size_t l = layers; l-- > 0;) {
      const int fan_in = sizes_[l];
      const int fan_out = sizes_[l + 1];
      const double* d = delta[l].data();
      const double* in = acts[l].data();
      double* gw = g.weights[l].data();
      double* gb = g.biases[l].data();
      for (int o = 0; o < fan_out; ++o) {
        const double dv = d[o];
        if (dv == 0.0) continue;
        gb[o] += dv;
        double* row = gw + static_cast<std::size_t>(o) * fan_in;
        for (int i = 0; i < fan_in; ++i) row[i] += dv * in[i];
      }
      if (l == 0) break;
      // Propagate through the rectifier: dead units pass nothing.
      delta[l - 1].assign(fan_in, 0.0);
      double* dp = delta[l - 1].data();
      const double* w = weights_[l].data();
      for (int o = 0; o < fan_out; ++o) {
        const double dv = d[o];
        if (dv == 0.0) continue;
        const double* row = w + static_cast<std::size_t>(o) * fan_in;
        for (int i = 0; i < fan_in; ++i) dp[i] += dv * row[i];
      }
      for (int i = 0; i < fan_in; ++i)
        if (in[i] <= 0.0) dp[i] = 0.0;
    }
  }

  g.loss = loss / static_cast<double>(batch);
  check_finite(g.loss, "non-finite loss");
  return g;
}

void Mlp::apply_update(const MlpGradients& g, double learning_rate) {
  if (g.weights.size() != weights_.size())
    throw std::runtime_error("mlp: gradient shape mismatch");
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    if (g.weights[l].size() != weights_[l].size() ||
        g.biases[l].size() != biases_[l].size())
      throw std::runtime_error("mlp: gradient shape mismatch");
    for (std::size_t i = 0; i < weights_[l].size(); ++i)
      weights_[l][i] -= learning_rate * g.weights[l][i];
    for (std::size_t i = 0; i < biases_[l].size(); ++i)
      biases_[l][i] -= learning_rate * g.biases[l][i];
  }
}

double& Mlp::weight(int layer, int out, int in) {
  return weights_.at(layer).at(static_cast<std::size_t>(out) * sizes_.at(layer) + in);
}

double Mlp::weight(int layer, int out, int in) const {
  return weights_.at(layer).at(static_cast<std::size_t>(out) * sizes_.at(layer) + in);
}

double& Mlp::bias(int layer, int out) { return biases_.at(layer).at(out); }

double Mlp::bias(int layer, int out) const { return biases_.at(layer).at(out); }

void Mlp::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("mlp: cannot open " + path + " for writing");
  f.write(kMagic, sizeof(kMagic));
  const std::uint32_t n = static_cast<std::uint32_t>(sizes_.size());
  f.write(reinterpret_cast<const char*>(&n), sizeof(n));
  for (int s : sizes_) {
    const std::uint32_t v = static_cast<std::uint32_t>(s);
    f.write(reinterpret_cast<const char*>(&v), sizeof(v));
  }
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    f.write(reinterpret_cast<const char*>(weights_[l].data()),
            static_cast<std::streamsize>(weights_[l].size() * sizeof(double)));
    f.write(reinterpret_cast<const char*>(biases_[l].data()),
            static_cast<std::streamsize>(biases_[l].size() * sizeof(double)));
  }
  if (!f) throw std::runtime_error("mlp: write failed for " + path);
}

Mlp Mlp::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("mlp: cannot open " + path);
  char magic[8];
  f.read(magic, sizeof(magic));
  if (!f || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("mlp: " + path + " is not a weight snapshot");
  std::uint32_t n = 0;
  f.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!f || n < 2 || n > 64)
    throw std::runtime_error("mlp: " + path + " has a corrupt layer count");
  Mlp net;
  net.sizes_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t v = 0;
    f.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!f || v == 0 || v > 1u << 20)
      throw std::runtime_error("mlp: " + path + " has a corrupt layer size");
    net.sizes_[i] = static_cast<int>(v);
  }
  for (std::uint32_t l = 0; l + 1 < n; ++l) {
    const std::size_t wn =
        static_cast<std::size_t>(net.sizes_[l]) * net.sizes_[l + 1];
    std::vector<double> w(wn);
    f.read(reinterpret_cast<char*>(w.data()),
           static_cast<std::streamsize>(wn * sizeof(double)));
    std::vector<double> b(net.sizes_[l + 1]);
    f.read(reinterpret_cast<char*>(b.data()),
           static_cast<std::streamsize>(b.size() * sizeof(double)));
    if (!f) throw std::runtime_error("mlp: " + path + " is truncated");
    net.weights_.push_back(std::move(w));
    net.biases_.push_back(std::move(b));
  }
  return net;
}

}  // namespace vavsim
