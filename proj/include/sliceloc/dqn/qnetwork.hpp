#pragma once

#include <array>
#include <random>

#include "sliceloc/env/mdp.hpp"
#include "sliceloc/nn/network.hpp"

namespace sliceloc::dqn {

using QValues = std::array<float, nn::kNumActions>;

/// Layer stack plus parameters; maps an observation to one Q-value per action.
class QNetwork {
 public:
  QNetwork(nn::NetworkSpec spec, std::mt19937_64& rng);
  QNetwork(nn::NetworkSpec spec, nn::ParamSet params);

  const nn::NetworkSpec& spec() const noexcept { return spec_; }
  const nn::ParamSet& params() const noexcept { return params_; }
  nn::ParamSet& params() noexcept { return params_; }

  env::WindowSpec window() const noexcept { return {spec_.input.rows, spec_.input.cols}; }

  QValues q_values(const env::Observation& obs) const;

  /// N×1×rows×cols batch → N×2.
  nn::Tensor q_batch(const nn::Tensor& batch) const;

 private:
  nn::NetworkSpec spec_;
  nn::ParamSet params_;
};

/// Argmax with ties resolved to the lower index (Up).
env::Action greedy_action(const QValues& q) noexcept;

/// ε-greedy: with probability epsilon a uniformly random action, otherwise
/// the greedy one. The network is not evaluated on exploratory draws.
env::Action select_action(const QNetwork& net, const env::Observation& obs, double epsilon,
                          std::mt19937_64& rng);

/// θ⁻ := θ. Throws ContractError when the architectures differ.
void sync_target(const QNetwork& policy, QNetwork& target);

/// Q(s,a) = V(s) + A(s,a) − mean_a A(s,·), the same arithmetic the dueling
/// head uses.
QValues dueling_q(float value, const QValues& advantages) noexcept;

}  // namespace sliceloc::dqn
