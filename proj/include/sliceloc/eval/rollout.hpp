#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sliceloc/dqn/qnetwork.hpp"
#include "sliceloc/eval/value_iteration.hpp"

namespace sliceloc::eval {

enum class Termination { Oscillation, StepCap };

std::string to_string(Termination t);

struct TraceStep {
  int position = 0;
  env::Action action = env::Action::Up;
  dqn::QValues q{};
};

struct EpisodeTrace {
  int start = 0;
  std::vector<TraceStep> steps;
  int predicted_row = 0;
  Termination termination = Termination::StepCap;
};

/// Q-values of the state at a given row of the image being searched.
using ActionValueFn = std::function<dqn::QValues(int row)>;

/// Test-time search: follow the greedy action until some row is visited for
/// the third time, then predict the row of that cycle whose state has the
/// lowest max-Q. Stops at 2·height steps otherwise, predicting the current
/// row. No goal information is used.
EpisodeTrace greedy_rollout(const ActionValueFn& q, int height, int start);

EpisodeTrace greedy_rollout(const dqn::QNetwork& net, const env::MipImage& image, int start);

/// Q-values of `net` at every row of `image`, in row order.
std::vector<dqn::QValues> q_profile(const dqn::QNetwork& net, const env::MipImage& image);

/// Fraction of non-goal rows, over all images, where the greedy action from
/// `q(image_index, row)` matches the value-iteration argmax for that image's
/// goal. Rows where the table ties count as agreement.
double policy_agreement(const std::function<dqn::QValues(std::size_t, int)>& q,
                        std::span<const env::MipImage> images, double gamma);

double policy_agreement(const dqn::QNetwork& net, std::span<const env::MipImage> images,
                        double gamma);

// ---- miniature line environment -------------------------------------------

/// Two-column line image: column 0 is a goal-relative ramp
/// 0.5 + 0.45·(row − goal)/(height − 1), column 1 is constant 1 so zero
/// padding is distinguishable from image content.
env::MipImage make_line_image(int height, int goal);

/// One line image per goal row.
std::vector<env::MipImage> make_line_dataset(int height);

/// Hand-set flatten→linear network over a `window_rows`×2 window whose greedy
/// policy steps toward the goal using the rows adjacent to the marker.
dqn::QNetwork make_line_reference_network(int window_rows);

}  // namespace sliceloc::eval
