#pragma once

#include <array>
#include <vector>

#include "sliceloc/env/mdp.hpp"

namespace sliceloc::eval {

/// Exact action values of the scrolling MDP on a line of `length` rows. The
/// goal row is terminal and holds zeros.
struct QTable {
  int length = 0;
  int goal = 0;
  std::vector<std::array<double, 2>> values;  // [row][action index]
  double residual = 0.0;                      // sup-norm |Q − T(Q)| of `values`
  int iterations = 0;

  double at(int row, env::Action a) const { return values.at(row)[env::to_index(a)]; }
  bool tie(int row) const { return values.at(row)[0] == values.at(row)[1]; }
  env::Action best(int row) const;
};

/// Transition table obtained by stepping env::EnvCursor from every non-goal
/// row with every action.
struct LineDynamics {
  struct Outcome {
    int next_row;
    double reward;
    bool terminal;
  };
  int length = 0;
  int goal = 0;
  std::vector<std::array<Outcome, 2>> outcomes;
};

LineDynamics line_dynamics(int length, int goal);

/// One application of the Bellman optimality operator.
std::vector<std::array<double, 2>> bellman_update(const LineDynamics& dynamics,
                                                  const std::vector<std::array<double, 2>>& q,
                                                  double gamma);

/// Fixed-point iteration from Q = 0 until the sup-norm residual drops below
/// `tol`.
QTable value_iteration(int length, int goal, double gamma, double tol,
                       int max_iterations = 1'000'000);

}  // namespace sliceloc::eval
