#pragma once

#include <array>
#include <vector>

namespace trimspec {

/// 1D Gauss-Legendre rule on [-1,1]. Exact for polynomials of degree <= 2q-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// Nodes and weights of the q-point Gauss-Legendre rule, computed by Newton
/// iteration on the Legendre polynomial. Accepts 1 <= q <= 32.
GaussRule gauss_rule(int q);

struct QuadPoint {
  std::array<double, 2> x{};  // x[1] unused in 1D
  double w = 0.0;
};

/// Points of `rule` mapped to the interval [a,b].
std::vector<QuadPoint> map_interval(const GaussRule& rule, double a, double b);

/// Tensor rule on the axis-aligned rectangle [lo, hi].
std::vector<QuadPoint> map_rectangle(const GaussRule& rx, const GaussRule& ry,
                                     const std::array<double, 2>& lo,
                                     const std::array<double, 2>& hi);

/// Duffy rule on the triangle (a,b,c): the unit square collapses onto the
/// triangle, the Jacobian u*2|area| is absorbed into the weights. With q
/// points per direction, total-degree-(2q-2) polynomials are integrated
/// exactly.
std::vector<QuadPoint> map_triangle(const GaussRule& rule,
                                    const std::array<double, 2>& a,
                                    const std::array<double, 2>& b,
                                    const std::array<double, 2>& c);

}  // namespace trimspec
