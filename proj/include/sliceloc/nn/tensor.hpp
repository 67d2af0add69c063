#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sliceloc/errors.hpp"

namespace sliceloc::nn {

using Dims = std::vector<std::int64_t>;

inline std::int64_t numel_of(const Dims& dims) {
  std::int64_t n = 1;
  for (auto d : dims) {
    if (d <= 0) throw ShapeError("tensor dims must be positive");
    n *= d;
  }
  return n;
}

std::string dims_to_string(const Dims& dims);

/// Dense row-major tensor (last dimension fastest).
template <typename T>
struct BasicTensor {
  Dims dims;
  std::vector<T> data;

  BasicTensor() = default;

  explicit BasicTensor(Dims d, T fill = T{0})
      : dims(std::move(d)), data(static_cast<std::size_t>(numel_of(dims)), fill) {}

  BasicTensor(Dims d, std::vector<T> values) : dims(std::move(d)), data(std::move(values)) {
    if (static_cast<std::size_t>(numel_of(dims)) != data.size()) {
      throw ShapeError("tensor of dims " + dims_to_string(dims) + " cannot hold " +
                       std::to_string(data.size()) + " values");
    }
  }

  std::size_t size() const noexcept { return data.size(); }
  std::size_t rank() const noexcept { return dims.size(); }
  std::int64_t dim(std::size_t i) const { return dims.at(i); }

  T& operator[](std::size_t i) { return data[i]; }
  const T& operator[](std::size_t i) const { return data[i]; }

  std::span<T> span() noexcept { return data; }
  std::span<const T> span() const noexcept { return data; }

  template <typename U>
  BasicTensor<U> cast() const {
    BasicTensor<U> out;
    out.dims = dims;
    out.data.assign(data.begin(), data.end());
    return out;
  }

  friend bool operator==(const BasicTensor&, const BasicTensor&) = default;
};

using Tensor = BasicTensor<float>;
using Tensor64 = BasicTensor<double>;

/// Named parameters, iterated in lexicographic name order.
template <typename T>
class BasicParamSet {
 public:
  using Map = std::map<std::string, BasicTensor<T>>;

  void add(const std::string& name, BasicTensor<T> value) {
    auto [it, inserted] = entries_.emplace(name, std::move(value));
    if (!inserted) throw ContractError("duplicate parameter name '" + name + "'");
  }

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  BasicTensor<T>& at(const std::string& name) {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ContractError("unknown parameter '" + name + "'");
    return it->second;
  }
  const BasicTensor<T>& at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ContractError("unknown parameter '" + name + "'");
    return it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::int64_t total_numel() const {
    std::int64_t n = 0;
    for (const auto& [_, t] : entries_) n += static_cast<std::int64_t>(t.size());
    return n;
  }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  template <typename U>
  BasicParamSet<U> cast() const {
    BasicParamSet<U> out;
    for (const auto& [name, t] : entries_) out.add(name, t.template cast<U>());
    return out;
  }

  // Same names with the same shapes.
  bool same_layout(const BasicParamSet& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    for (; a != entries_.end(); ++a, ++b) {
      if (a->first != b->first || a->second.dims != b->second.dims) return false;
    }
    return true;
  }

  friend bool operator==(const BasicParamSet&, const BasicParamSet&) = default;

 private:
  Map entries_;
};

using ParamSet = BasicParamSet<float>;
using ParamSet64 = BasicParamSet<double>;

}  // namespace sliceloc::nn
