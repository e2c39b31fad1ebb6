#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vavsim {

// Per-parameter gradients mirroring a network's layer shapes.
struct MlpGradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
  double loss = 0.0;
  double global_norm() const;
  void scale(double factor);
};

// Fully-connected net, rectifier hidden activations, identity output.
// Weights are row-major: weights[layer][out * fan_in + in].
class Mlp {
 public:
  Mlp() = default;
  // Uniform init in +-sqrt(6 / (fan_in + fan_out)), biases zero, seeded.
  Mlp(std::vector<int> layer_sizes, std::uint64_t seed);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  std::size_t parameter_count() const;
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }

  std::vector<double> forward(std::span<const double> input) const;

  // Mean squared error between output[actions[k]] and targets[k], gradients
  // for every weight and bias. Inputs outside the taken action contribute no
  // output-layer error.
  MlpGradients gradients(const std::vector<std::vector<double>>& inputs,
                         const std::vector<int>& actions,
                         const std::vector<double>& targets) const;

  void apply_update(const MlpGradients& g, double learning_rate);

  // Direct parameter access for finite-difference checks.
  double& weight(int layer, int out, int in);
  double weight(int layer, int out, int in) const;
  double& bias(int layer, int out);
  double bias(int layer, int out) const;

  void save(const std::string& path) const;
  static Mlp load(const std::string& path);

  friend bool operator==(const Mlp&, const Mlp&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<double>> biases_;
};

}  // namespace vavsim
