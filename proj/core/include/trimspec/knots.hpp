#pragma once

#include <span>
#include <utility>
#include <vector>

namespace trimspec {

/// Open knot vector: first and last breakpoints repeated degree+1 times,
/// interior multiplicities in [1, degree]. Breakpoints are compared exactly;
/// callers must pass exactly representable coordinates.
struct KnotVector {
  int degree = 0;
  std::vector<double> knots;            // nondecreasing
  std::vector<double> breakpoints;      // strictly increasing
  std::vector<int> multiplicities;      // per breakpoint

  int dim() const { return static_cast<int>(knots.size()) - degree - 1; }
  int num_elements() const { return static_cast<int>(breakpoints.size()) - 1; }
  double left() const { return breakpoints.front(); }
  double right() const { return breakpoints.back(); }
};

/// Values (and optionally first derivatives) of the degree+1 basis functions
/// supported on one element. Global function indices are
/// first_index .. first_index+degree.
struct BasisEval1D {
  int element = -1;
  int first_index = 0;
  std::vector<double> values;
  std::vector<double> derivs;  // empty unless requested
};

/// Univariate spline space on an open knot vector.
class SplineSpace1D {
 public:
  SplineSpace1D() = default;
  explicit SplineSpace1D(KnotVector kv);

  int degree() const { return kv_.degree; }
  int dim() const { return kv_.dim(); }
  int num_elements() const { return kv_.num_elements(); }
  const KnotVector& knot_vector() const { return kv_; }

  /// Element l is the half-open interval [breakpoint l, breakpoint l+1).
  std::pair<double, double> element(int l) const;

  /// Smoothness degree - multiplicity at an interior breakpoint.
  int local_smoothness(int breakpoint_index) const;

  /// Closed support [xi_i, xi_{i+p+1}] of basis function i (0-based).
  std::pair<double, double> support_interval(int i) const;

  /// Element index range [first, last] covered by the support of function i.
  std::pair<int, int> support_elements(int i) const;

  /// Index of the element containing x (right-closed at the final knot).
  int element_of(double x) const;

  /// Cox-de Boor evaluation at x. Values at a knot are limits from the
  /// right, except at the final knot (limit from the left).
  BasisEval1D eval(double x, int max_deriv) const;

 private:
  KnotVector kv_;
  std::vector<int> span_of_element_;  // knot-span index per element
};

/// Space of degree p and C^k inter-element continuity on the given
/// breakpoints: interior knots carry multiplicity p-k.
SplineSpace1D make_space(int p, std::span<const double> breakpoints, int k);

/// Uniform breakpoints i/n_elems on [a,b].
std::vector<double> uniform_breakpoints(double a, double b, int n_elems);

}  // namespace trimspec
