#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lidsnet {

// Row-major dense tensor. Thin: just shape + storage. The numeric kernels
// in nn.hpp work on spans; this type carries parameters around and gives
// serialization something to hold on to.
template <typename T>
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
    data.assign(element_count(shape), T(0));
  }

  static std::size_t element_count(const std::vector<std::size_t>& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1},
                           [](std::size_t a, std::size_t b) { return a * b; });
  }

  std::size_t size() const { return data.size(); }
  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }
};

template <typename T>
inline bool all_finite(std::span<const T> xs) {
  for (T x : xs) {
    if (!std::isfinite(static_cast<double>(x))) return false;
  }
  return true;
}

template <typename T>
inline void require_finite(std::span<const T> xs, const std::string& what) {
  if (!all_finite(xs)) {
    throw std::runtime_error("non-finite value in " + what);
  }
}

}  // namespace lidsnet
