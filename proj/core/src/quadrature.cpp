#include "trimspec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace trimspec {

GaussRule gauss_rule(int q) {
  if (q < 1 || q > 32) throw std::invalid_argument("gauss_rule: q out of [1,32]");
  GaussRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  const int m = (q + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_q.
    double z = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < q; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = q * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) {
        // one clean-up step on converged roots
        p1 = 1.0;
        p2 = 0.0;
        for (int j = 0; j < q; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
        }
        pp = q * (z * p1 - p2) / (z * z - 1.0);
        z = z - p1 / pp;
        break;
      }
    }
    rule.nodes[i] = -z;
    rule.nodes[q - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[q - 1 - i] = rule.weights[i];
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

std::vector<QuadPoint> map_interval(const GaussRule& rule, double a, double b) {
  std::vector<QuadPoint> pts(rule.size());
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < rule.size(); ++i) {
    pts[i].x = {mid + half * rule.nodes[i], 0.0};
    pts[i].w = half * rule.weights[i];
  }
  return pts;
}

std::vector<QuadPoint> map_rectangle(const GaussRule& rx, const GaussRule& ry,
                                     const std::array<double, 2>& lo,
                                     const std::array<double, 2>& hi) {
  std::vector<QuadPoint> pts;
  pts.reserve(static_cast<std::size_t>(rx.size()) * ry.size());
  const double mx = 0.5 * (lo[0] + hi[0]), hx = 0.5 * (hi[0] - lo[0]);
  const double my = 0.5 * (lo[1] + hi[1]), hy = 0.5 * (hi[1] - lo[1]);
  for (int j = 0; j < ry.size(); ++j)
    for (int i = 0; i < rx.size(); ++i)
      pts.push_back({{mx + hx * rx.nodes[i], my + hy * ry.nodes[j]},
                     hx * hy * rx.weights[i] * ry.weights[j]});
  return pts;
}

std::vector<QuadPoint> map_triangle(const GaussRule& rule,
                                    const std::array<double, 2>& a,
                                    const std::array<double, 2>& b,
                                    const std::array<double, 2>& c) {
  // x(u,v) = a + u(b-a) + uv(c-b), |J| = u |det(b-a, c-b)| on [0,1]^2.
  const double e1x = b[0] - a[0], e1y = b[1] - a[1];
  const double e2x = c[0] - b[0], e2y = c[1] - b[1];
  const double det = std::abs(e1x * e2y - e1y * e2x);
  std::vector<QuadPoint> pts;
  pts.reserve(static_cast<std::size_t>(rule.size()) * rule.size());
  for (int j = 0; j < rule.size(); ++j) {
    const double v = 0.5 * (rule.nodes[j] + 1.0);
    const double wv = 0.5 * rule.weights[j];
    for (int i = 0; i < rule.size(); ++i) {
      const double u = 0.5 * (rule.nodes[i] + 1.0);
      const double wu = 0.5 * rule.weights[i];
      pts.push_back({{a[0] + u * e1x + u * v * e2x, a[1] + u * e1y + u * v * e2y},
                     wu * wv * u * det});
    }
  }
  return pts;
}

}  // namespace trimspec
