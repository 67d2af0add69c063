#pragma once

#include <cstdint>

#include "sliceloc/nn/tensor.hpp"

namespace sliceloc::nn {

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // Global-norm gradient clip; <= 0 disables it.
  double clip_norm = 0.0;
};

struct AdamState {
  ParamSet first_moment;
  ParamSet second_moment;
  std::int64_t step = 0;

  friend bool operator==(const AdamState&, const AdamState&) = default;
};

/// Zeroed moments matching the layout of `params`.
AdamState make_adam_state(const ParamSet& params);

double global_norm(const ParamSet& grads);

/// One bias-corrected Adam update applied in place. Throws ContractError if
/// params, grads and moments are not aligned by name and shape.
void adam_step(ParamSet& params, const ParamSet& grads, AdamState& state, const AdamConfig& config);

}  // namespace sliceloc::nn
