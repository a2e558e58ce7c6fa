#pragma once

#include <cstddef>
#include <vector>

#include "attrex/error.hpp"

namespace attrex {

// Dense row-major N-d array of 64-bit floats. The universal value type of
// the toolkit; shapes are explicit and checked at operation boundaries.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> s, double fill = 0.0)
      : shape(std::move(s)), data(num_elements(shape), fill) {}

  static Tensor from_data(std::vector<std::size_t> s, std::vector<double> d) {
    if (num_elements(s) != d.size()) {
      fail(ErrorCode::kShapeMismatch, "tensor data length does not match shape");
    }
    Tensor t;
    t.shape = std::move(s);
    t.data = std::move(d);
    return t;
  }

  static std::size_t num_elements(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    return n;
  }

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t dim(std::size_t i) const { return shape[i]; }
  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t i, std::size_t j) {
    return data[i * shape[1] + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * shape[1] + j];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) {
    return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) const {
    return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }

  bool all_finite() const;
  double min_value() const;
  double max_value() const;
  double sum() const;
};

void check_same_shape(const Tensor& a, const Tensor& b, const char* where);

}  // namespace attrex
