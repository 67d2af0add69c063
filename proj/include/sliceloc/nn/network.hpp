#pragma once

#include <random>
#include <string>
#include <vector>

#include "sliceloc/nn/tape.hpp"

namespace sliceloc::nn {

enum class LayerKind { Conv, Linear, PRelu, LeakyRelu, Flatten };

std::string to_string(LayerKind kind);
LayerKind layer_kind_from_string(const std::string& name);

struct LayerSpec {
  LayerKind kind = LayerKind::Flatten;
  // conv
  int filters = 0;
  int kernel_h = 0;
  int kernel_w = 0;
  int stride = 1;
  int padding = 0;
  // linear
  int out_features = 0;
  // activations
  double negative_slope = 0.01;
  double alpha_init = 0.25;

  static LayerSpec conv(int filters, int kernel, int stride, int padding);
  static LayerSpec linear(int out_features);
  static LayerSpec prelu(double alpha_init = 0.25);
  static LayerSpec leaky_relu(double slope = 0.01);
  static LayerSpec flatten();

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

enum class HeadKind { Plain, Dueling };

std::string to_string(HeadKind kind);
HeadKind head_kind_from_string(const std::string& name);

struct InputShape {
  int channels = 1;
  int rows = 0;
  int cols = 0;

  friend bool operator==(const InputShape&, const InputShape&) = default;
};

/// Layer stack of a Q-network. `layers` always describes the plain network;
/// with a dueling head the tail starting at the second-to-last linear layer is
/// duplicated into a value stream (ending in width 1) and an advantage stream
/// (ending in the action count), recombined by mean-subtracted aggregation.
struct NetworkSpec {
  InputShape input;
  std::vector<LayerSpec> layers;
  HeadKind head = HeadKind::Plain;

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

inline constexpr int kNumActions = 2;

/// conv(8,5,s2) PReLU conv(16,5,s2) PReLU conv(32,3,s2) PReLU conv(32,3,s2)
/// PReLU flatten fc512 LReLU fc128 LReLU fc32 LReLU fc2. Convolutions pad by
/// kernel/2.
NetworkSpec default_network(InputShape input, HeadKind head = HeadKind::Plain);

/// Throws ShapeError unless the stack maps `input` to exactly kNumActions
/// outputs (and, for dueling heads, has at least two linear layers).
void validate(const NetworkSpec& spec);

/// Parameter names and shapes in lexicographic order.
std::vector<std::pair<std::string, Dims>> parameter_layout(const NetworkSpec& spec);

/// Kaiming-uniform (fan-in) weights, zero biases, PReLU slopes at alpha_init.
ParamSet init_params(const NetworkSpec& spec, std::mt19937_64& rng);

/// Forward pass over a batch N×C×H×W, returning N×2 Q-values. When
/// `trainable` is false parameters are recorded as constants and no gradients
/// flow to them.
template <typename T>
typename Tape<T>::Var forward(const NetworkSpec& spec, Tape<T>& tape, typename Tape<T>::Var input,
                              const BasicParamSet<T>& params, bool trainable);

}  // namespace sliceloc::nn
