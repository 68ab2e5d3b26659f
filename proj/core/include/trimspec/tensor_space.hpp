#pragma once

#include <array>
#include <vector>

#include "trimspec/knots.hpp"

namespace trimspec {

using Vec2 = std::array<double, 2>;
using Idx2 = std::array<int, 2>;

/// Values and gradients of the locally supported tensor-product functions at
/// one point: functions (i1,i2) with i1 in [first[0], first[0]+p1] etc.,
/// stored x-fastest.
struct TensorEval {
  Idx2 element{};
  Idx2 first{};
  std::vector<double> values;
  std::vector<std::array<double, 2>> grads;  // empty unless requested
};

/// Tensor product of 1 or 2 univariate spline spaces. Basis functions and
/// background elements carry linear indices with the first direction fastest.
class TensorSplineSpace {
 public:
  TensorSplineSpace() = default;
  explicit TensorSplineSpace(std::vector<SplineSpace1D> factors);

  int num_dirs() const { return static_cast<int>(factors_.size()); }
  const SplineSpace1D& factor(int d) const { return factors_[d]; }

  int dim() const;
  int dir_dim(int d) const { return factors_[d].dim(); }

  int linear_index(const Idx2& mi) const;
  Idx2 multi_index(int i) const;

  int num_elements() const;
  int element_linear(const Idx2& me) const;
  Idx2 element_multi(int e) const;
  /// Axis-aligned bounds of element e (second coordinate is {0,0} in 1D).
  std::pair<Vec2, Vec2> element_bounds(int e) const;
  double element_measure(int e) const;

  /// Values (and gradients for max_deriv >= 1) of all functions supported at
  /// the given point. In 1D pass {x, 0}.
  TensorEval eval(const Vec2& x, int max_deriv) const;

 private:
  std::vector<SplineSpace1D> factors_;
};

}  // namespace trimspec
