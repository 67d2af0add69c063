#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sliceloc/nn/tensor.hpp"

namespace sliceloc::nn {

/// Reverse-mode differentiation tape.
///
/// Every op appends a node holding its forward value and, when any input
/// requires a gradient, a closure that propagates the output gradient back to
/// its inputs. Nodes are kept in a deque so references to earlier values stay
/// valid while new nodes are appended.
///
/// Parameters are registered by reference: the tensors passed to parameter()
/// and constant_ref() must outlive the tape.
template <typename T>
class Tape {
 public:
  struct Var {
    std::size_t id;
  };

  using BackwardFn = std::function<void(Tape&)>;

  Var constant(BasicTensor<T> value);
  Var constant_ref(const BasicTensor<T>& value);
  Var parameter(const std::string& name, const BasicTensor<T>& value);

  // Appends an op result. `backward` may be empty when requires_grad is false.
  Var record(BasicTensor<T> value, bool requires_grad, BackwardFn backward);

  const BasicTensor<T>& value(Var v) const;
  bool requires_grad(Var v) const { return nodes_.at(v.id).requires_grad; }

  // Gradient of the last backward() target with respect to v (zeros if v was
  // not reached).
  const BasicTensor<T>& grad(Var v);

  // Mutable gradient buffer of v, zero-initialized on first use. For op
  // implementations.
  BasicTensor<T>& grad_buffer(Var v);

  /// Runs reverse accumulation from a scalar and returns d(loss)/d(param) for
  /// every registered parameter, keyed by name. Parameters registered under
  /// the same name more than once have their gradients summed.
  BasicParamSet<T> backward(Var loss);

  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    BasicTensor<T> owned;
    const BasicTensor<T>* ref = nullptr;
    BasicTensor<T> grad;
    bool has_grad = false;
    bool requires_grad = false;
    std::string param_name;
    BackwardFn backward;
  };

  std::deque<Node> nodes_;
};

// ---- ops -------------------------------------------------------------------

/// 2-D cross-correlation with zero padding. Input is C×H×W or N×C×H×W,
/// weights F×C×kh×kw, bias F.
template <typename T>
typename Tape<T>::Var conv2d(Tape<T>& tape, typename Tape<T>::Var input,
                             typename Tape<T>::Var weights, typename Tape<T>::Var bias, int stride,
                             int pad);

/// out = W·x + b. Input is N or B×N, weights M×N, bias M.
template <typename T>
typename Tape<T>::Var linear(Tape<T>& tape, typename Tape<T>::Var input,
                             typename Tape<T>::Var weights, typename Tape<T>::Var bias);

/// Parametric ReLU with per-channel (or shared, length 1) learnable slope.
/// The channel axis is 1 for batched tensors (rank 2 and 4) and 0 otherwise.
template <typename T>
typename Tape<T>::Var prelu(Tape<T>& tape, typename Tape<T>::Var input,
                            typename Tape<T>::Var alpha);

template <typename T>
typename Tape<T>::Var leaky_relu(Tape<T>& tape, typename Tape<T>::Var input, double slope);

/// C×H×W → C·H·W and N×C×H×W → N×(C·H·W).
template <typename T>
typename Tape<T>::Var flatten(Tape<T>& tape, typename Tape<T>::Var input);

/// Mean of squared differences over all elements.
template <typename T>
typename Tape<T>::Var mse_loss(Tape<T>& tape, typename Tape<T>::Var pred,
                               typename Tape<T>::Var target);

template <typename T>
typename Tape<T>::Var add(Tape<T>& tape, typename Tape<T>::Var a, typename Tape<T>::Var b);

template <typename T>
typename Tape<T>::Var mul(Tape<T>& tape, typename Tape<T>::Var a, typename Tape<T>::Var b);

template <typename T>
typename Tape<T>::Var sum(Tape<T>& tape, typename Tape<T>::Var a);

/// Picks q[b][actions[b]] from a B×A tensor.
template <typename T>
typename Tape<T>::Var gather_rows(Tape<T>& tape, typename Tape<T>::Var q,
                                  std::span<const int> actions);

/// Dueling aggregation: Q[b][a] = V[b] + (A[b][a] − mean_a A[b][·]).
/// value is B×1, advantage B×A.
template <typename T>
typename Tape<T>::Var dueling_combine(Tape<T>& tape, typename Tape<T>::Var value,
                                      typename Tape<T>::Var advantage);

}  // namespace sliceloc::nn
