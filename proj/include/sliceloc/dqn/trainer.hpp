#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "sliceloc/dqn/qnetwork.hpp"
#include "sliceloc/dqn/replay.hpp"
#include "sliceloc/nn/adam.hpp"

namespace sliceloc::dqn {

struct TrainConfig {
  double gamma = 0.9;
  int batch_size = 48;
  int replay_capacity = 17000;
  int target_sync_period = 50;  // in gradient steps
  int episodes = 2000;
  double epsilon_start = 1.0;
  double epsilon_step = 0.1;
  double epsilon_floor = 0.1;
  int episodes_per_decay = 0;  // 0 = episodes / 10
  int warmup_transitions = 1000;
  int train_every = 1;  // environment steps per gradient step
  double learning_rate = 1e-4;
  double clip_norm = 0.0;  // 0 disables global-norm clipping
  double step_cap_factor = 1.5;
  std::uint64_t seed = 0;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

/// Throws ConfigError naming the offending field.
void validate(const TrainConfig& config);

/// Staircase: start − step·⌊episode / episodes_per_decay⌋, never below floor.
struct EpsilonSchedule {
  double start = 1.0;
  double step = 0.1;
  double floor = 0.1;
  int episodes_per_decay = 200;

  static EpsilonSchedule from_config(const TrainConfig& config);
};

double epsilon_value(const EpsilonSchedule& schedule, std::int64_t episode);

/// Materialized minibatch: observations rebuilt from the transitions' state
/// references.
struct Batch {
  nn::Tensor states;       // B×1×rows×cols
  nn::Tensor next_states;  // B×1×rows×cols
  std::vector<int> actions;
  std::vector<float> rewards;
  std::vector<std::uint8_t> terminal;

  std::size_t size() const noexcept { return actions.size(); }
};

Batch make_batch(std::span<const Transition> transitions, std::span<const env::MipImage> images,
                 const env::WindowSpec& window);

/// r for terminal transitions, r + γ·max_a′ Q_target(s′, a′) otherwise.
/// next_q is B×2 from the target network.
std::vector<float> td_targets(std::span<const float> rewards, std::span<const std::uint8_t> terminal,
                              const nn::Tensor& next_q, double gamma);

std::vector<float> td_targets(const Batch& batch, const QNetwork& target, double gamma);

/// One gradient step on mean squared TD error; only the policy parameters
/// move. Returns the loss before the update. Throws NumericError on a
/// non-finite loss or gradient.
float train_step(QNetwork& policy, const QNetwork& target, const Batch& batch, double gamma,
                 nn::AdamState& optimizer, const nn::AdamConfig& adam, std::int64_t step_index);

struct EpisodeLog {
  int episode = 0;
  int steps = 0;
  double total_reward = 0.0;
  bool terminal = false;
  double epsilon = 0.0;
  double mean_loss = 0.0;  // NaN when no gradient step ran in the episode
};

struct SyncEvent {
  std::int64_t gradient_step = 0;
  std::int64_t env_step = 0;
  int episode = 0;
};

struct TrainingMeta {
  std::int64_t gradient_steps = 0;
  std::int64_t env_steps = 0;
  int episodes = 0;
  double epsilon = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const TrainingMeta&, const TrainingMeta&) = default;
};

/// Single-threaded DQN training loop over a fixed dataset; a deterministic
/// function of (config, network spec, dataset).
class Trainer {
 public:
  Trainer(TrainConfig config, nn::NetworkSpec spec, std::vector<env::MipImage> dataset);

  EpisodeLog run_episode();

  /// Runs the remaining configured episodes.
  std::vector<EpisodeLog> run();

  /// Called after every gradient step (after any target sync it triggers).
  void on_gradient_step(std::function<void(const Trainer&)> hook) { hook_ = std::move(hook); }

  const TrainConfig& config() const noexcept { return config_; }
  const QNetwork& policy() const noexcept { return policy_; }
  const QNetwork& target() const noexcept { return target_; }
  const ReplayBuffer& replay() const noexcept { return replay_; }
  const std::vector<env::MipImage>& dataset() const noexcept { return dataset_; }
  const std::vector<EpisodeLog>& log() const noexcept { return log_; }
  const std::vector<SyncEvent>& syncs() const noexcept { return syncs_; }
  std::int64_t gradient_steps() const noexcept { return gradient_steps_; }
  std::int64_t env_steps() const noexcept { return env_steps_; }
  int episodes_done() const noexcept { return episode_; }
  TrainingMeta meta() const;

 private:
  TrainConfig config_;
  EpsilonSchedule schedule_;
  nn::AdamConfig adam_;
  std::vector<env::MipImage> dataset_;
  std::mt19937_64 rng_;
  QNetwork policy_;
  QNetwork target_;
  nn::AdamState optimizer_;
  ReplayBuffer replay_;
  std::vector<EpisodeLog> log_;
  std::vector<SyncEvent> syncs_;
  std::int64_t gradient_steps_ = 0;
  std::int64_t env_steps_ = 0;
  int episode_ = 0;
  std::function<void(const Trainer&)> hook_;
};

}  // namespace sliceloc::dqn
