#include "trimspec/knots.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace trimspec {

SplineSpace1D::SplineSpace1D(KnotVector kv) : kv_(std::move(kv)) {
  const int p = kv_.degree;
  if (kv_.dim() < p + 1) throw std::invalid_argument("knot vector too short");
  for (std::size_t i = 1; i < kv_.knots.size(); ++i)
    if (kv_.knots[i] < kv_.knots[i - 1])
      throw std::invalid_argument("knots must be nondecreasing");
  // span index of the first knot equal to each breakpoint's right limit
  span_of_element_.resize(kv_.num_elements());
  int pos = 0;
  for (int l = 0; l < kv_.num_elements(); ++l) {
    while (kv_.knots[pos + 1] <= kv_.breakpoints[l]) ++pos;
    span_of_element_[l] = pos;
  }
}

std::pair<double, double> SplineSpace1D::element(int l) const {
  if (l < 0 || l >= num_elements()) throw std::out_of_range("element index");
  return {kv_.breakpoints[l], kv_.breakpoints[l + 1]};
}

int SplineSpace1D::local_smoothness(int breakpoint_index) const {
  if (breakpoint_index <= 0 ||
      breakpoint_index >= static_cast<int>(kv_.breakpoints.size()) - 1)
    throw std::out_of_range("interior breakpoint index");
  return kv_.degree - kv_.multiplicities[breakpoint_index];
}

std::pair<double, double> SplineSpace1D::support_interval(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("basis index");
  return {kv_.knots[i], kv_.knots[i + kv_.degree + 1]};
}

std::pair<int, int> SplineSpace1D::support_elements(int i) const {
  auto [a, b] = support_interval(i);
  // breakpoints are exact copies of knot values, so exact search is safe
  const auto& bp = kv_.breakpoints;
  const int first =
      static_cast<int>(std::lower_bound(bp.begin(), bp.end(), a) - bp.begin());
  const int last =
      static_cast<int>(std::lower_bound(bp.begin(), bp.end(), b) - bp.begin()) - 1;
  return {first, last};
}

int SplineSpace1D::element_of(double x) const {
  const auto& bp = kv_.breakpoints;
  if (x < bp.front() || x > bp.back())
    throw std::out_of_range("evaluation point outside parametric interval");
  if (x == bp.back()) return num_elements() - 1;
  const int l =
      static_cast<int>(std::upper_bound(bp.begin(), bp.end(), x) - bp.begin()) - 1;
  return l;
}

BasisEval1D SplineSpace1D::eval(double x, int max_deriv) const {
  const int p = kv_.degree;
  const int l = element_of(x);
  const int s = span_of_element_[l];  // knots[s] <= x < knots[s+1] (or last)
  const auto& t = kv_.knots;

  BasisEval1D out;
  out.element = l;
  out.first_index = s - p;
  out.values.assign(p + 1, 0.0);

  // triangular Cox-de Boor recursion; left/right distances reused per level
  std::vector<double> left(p + 1), right(p + 1);
  out.values[0] = 1.0;
  std::vector<double> lower;  // degree p-1 values, kept for the derivative
  for (int j = 1; j <= p; ++j) {
    if (j == p && max_deriv >= 1) lower = out.values;
    left[j] = x - t[s + 1 - j];
    right[j] = t[s + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double temp = out.values[r] / (right[r + 1] + left[j - r]);
      out.values[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    out.values[j] = saved;
  }

  if (max_deriv >= 1) {
    // N'_{i,p} = p [ N_{i,p-1}/(t_{i+p}-t_i) - N_{i+1,p-1}/(t_{i+p+1}-t_{i+1}) ]
    out.derivs.assign(p + 1, 0.0);
    if (p > 0) {
      for (int r = 0; r <= p; ++r) {
        const int i = s - p + r;
        double d = 0.0;
        if (r > 0) {
          const double den = t[i + p] - t[i];
          if (den > 0.0) d += lower[r - 1] / den;
        }
        if (r < p) {
          const double den = t[i + p + 1] - t[i + 1];
          if (den > 0.0) d -= lower[r] / den;
        }
        out.derivs[r] = p * d;
      }
    }
  }
  return out;
}

SplineSpace1D make_space(int p, std::span<const double> breakpoints, int k) {
  if (p < 1) throw std::invalid_argument("make_space: degree must be >= 1");
  if (k < 0 || k > p - 1)
    throw std::invalid_argument("make_space: smoothness k must be in [0, p-1]");
  if (breakpoints.size() < 2)
    throw std::invalid_argument("make_space: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("make_space: breakpoints must be strictly increasing");

  const int m = p - k;
  KnotVector kv;
  kv.degree = p;
  kv.breakpoints.assign(breakpoints.begin(), breakpoints.end());
  kv.multiplicities.assign(breakpoints.size(), m);
  kv.multiplicities.front() = p + 1;
  kv.multiplicities.back() = p + 1;
  for (std::size_t b = 0; b < kv.breakpoints.size(); ++b)
    kv.knots.insert(kv.knots.end(), kv.multiplicities[b], kv.breakpoints[b]);
  return SplineSpace1D(std::move(kv));
}

std::vector<double> uniform_breakpoints(double a, double b, int n_elems) {
  if (n_elems < 1) throw std::invalid_argument("uniform_breakpoints: n_elems >= 1");
  std::vector<double> bp(n_elems + 1);
  for (int i = 0; i <= n_elems; ++i)
    bp[i] = (i == n_elems) ? b : a + (b - a) * i / n_elems;
  return bp;
}

}  // namespace trimspec
