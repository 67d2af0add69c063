#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sliceloc/nn/tensor.hpp"

namespace sliceloc::env {

/// Frontal projection image, one row per millimetre after resampling. Row 0
/// is the top of the image.
struct MipImage {
  int height = 0;
  int width = 0;
  std::vector<float> pixels;  // row-major, values in [0, 1]
  int target_row = -1;        // -1 when unannotated
  double spacing_mm = 1.0;

  bool annotated() const noexcept { return target_row >= 0; }
  float at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }

  friend bool operator==(const MipImage&, const MipImage&) = default;
};

/// Throws ContractError on inconsistent dims, out-of-range pixels, or (when
/// `require_target`) a missing or out-of-range target row.
void validate(const MipImage& image, bool require_target = true);

/// Up moves toward row 0, Down toward the bottom. The numeric encoding is
/// part of the checkpoint format.
enum class Action : int { Up = 0, Down = 1 };

inline constexpr std::array<Action, 2> kActions{Action::Up, Action::Down};

inline int to_index(Action a) noexcept { return static_cast<int>(a); }
Action action_from_index(int index);

struct WindowSpec {
  int rows = 200;
  int cols = 512;

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// 1 × rows × cols tensor.
using Observation = nn::Tensor;

/// Window of `window.rows` rows centred on `position` with the marker row
/// (local index rows/2) set to 1.0. Rows outside the image are zero; narrower
/// images are zero-padded symmetrically and wider ones centre-cropped.
Observation extract_state(const MipImage& image, int position, const WindowSpec& window);

/// Same as extract_state, writing into a caller-provided rows·cols buffer.
void extract_state_into(const MipImage& image, int position, const WindowSpec& window,
                        std::span<float> out);

/// 0.5 on reaching the goal, −1 for a blocked move, otherwise the sign of the
/// distance reduction (+1 closer, −1 farther).
float reward(int position, int next_position, int goal, bool terminal, bool blocked);

struct Move {
  int next_position;
  bool blocked;
};

/// Raw translation with boundary blocking; no goal logic.
Move apply_action(int position, Action action, int height);

struct StepOutcome {
  Observation next_observation;
  float reward = 0.0f;
  bool terminal = false;
  bool blocked = false;
  int next_position = 0;
};

/// Single-episode view onto an annotated image. The image must outlive it.
class EnvCursor {
 public:
  EnvCursor(const MipImage& image, int position, WindowSpec window);

  /// Advances one translation. Throws ContractError once the episode has
  /// reached its goal.
  StepOutcome step(Action action);

  Observation observe() const { return extract_state(*image_, position_, window_); }

  const MipImage& image() const noexcept { return *image_; }
  const WindowSpec& window() const noexcept { return window_; }
  int position() const noexcept { return position_; }
  int step_count() const noexcept { return step_count_; }
  bool done() const noexcept { return done_; }

 private:
  const MipImage* image_;
  WindowSpec window_;
  int position_;
  int step_count_ = 0;
  bool done_ = false;
};

/// Uniform start row excluding the target row.
int sample_start(const MipImage& image, std::mt19937_64& rng);

struct ResetResult {
  EnvCursor cursor;
  Observation observation;
};

ResetResult reset(const MipImage& image, std::mt19937_64& rng, WindowSpec window);

}  // namespace sliceloc::env
