#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sliceloc/env/mdp.hpp"

namespace sliceloc::dqn {

/// A state is the observation window at `row` of dataset image `image`.
/// Observations are rebuilt on demand from these references, which keeps a
/// full-size buffer at a few hundred kilobytes.
struct StateRef {
  int image = 0;
  int row = 0;

  friend bool operator==(const StateRef&, const StateRef&) = default;
};

struct Transition {
  StateRef state;
  env::Action action = env::Action::Up;
  float reward = 0.0f;
  StateRef next_state;
  bool terminal = false;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Fixed-capacity ring buffer with oldest-first eviction.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(const Transition& t);

  /// i-th stored transition, 0 being the oldest still present.
  const Transition& at(std::size_t i) const;

  /// `batch` draws, i.i.d. uniform with replacement over the contents.
  std::vector<Transition> sample(std::size_t batch, std::mt19937_64& rng) const;

  std::size_t size() const noexcept { return items_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::uint64_t insertions() const noexcept { return insertions_; }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // slot of the oldest item once full
  std::uint64_t insertions_ = 0;
  std::vector<Transition> items_;
};

}  // namespace sliceloc::dqn
