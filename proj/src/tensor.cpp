#include "attrex/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace attrex {

bool Tensor::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double Tensor::min_value() const {
  return *std::min_element(data.begin(), data.end());
}

double Tensor::max_value() const {
  return *std::max_element(data.begin(), data.end());
}

double Tensor::sum() const {
  double s = 0.0;
  for (double v : data) s += v;
  return s;
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* where) {
  if (!a.same_shape(b)) {
    fail(ErrorCode::kShapeMismatch,
         std::string(where) + ": tensor shapes disagree");
  }
}

}  // namespace attrex
