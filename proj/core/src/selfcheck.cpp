#include "trimspec/selfcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace trimspec {

namespace {

// negative pivot count of an unpivoted LDL^T sweep; breakdowns are nudged
int negative_pivots(Eigen::MatrixXd C) {
  const int n = static_cast<int>(C.rows());
  const double scale = std::max(C.cwiseAbs().maxCoeff(), 1e-300);
  int neg = 0;
  for (int k = 0; k < n; ++k) {
    double piv = C(k, k);
    if (std::abs(piv) < 1e-14 * scale)
      piv = (piv >= 0.0 ? 1.0 : -1.0) * 1e-14 * scale;
    if (piv < 0.0) ++neg;
    for (int i = k + 1; i < n; ++i) {
      const double lik = C(i, k) / piv;
      for (int j = k + 1; j <= i; ++j) C(i, j) -= lik * C(k, j);
      C(i, k) = 0.0;
    }
    for (int j = k + 1; j < n; ++j) C(k, j) = 0.0;
  }
  return neg;
}

}  // namespace

Eigen::VectorXd eig_inertia_bisection(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                      double rel_tol) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n || B.rows() != n || B.cols() != n)
    throw std::invalid_argument("eig_inertia_bisection: size mismatch");

  // lambda_min(B) by bisection on the inertia of B - t I
  double blo = 0.0, bhi = B.diagonal().minCoeff();
  if (!(bhi > 0.0))
    throw std::invalid_argument("eig_inertia_bisection: B has nonpositive diagonal");
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (blo + bhi);
    if (negative_pivots(B - mid * Eigen::MatrixXd::Identity(n, n)) >= 1)
      bhi = mid;
    else
      blo = mid;
  }
  const double bmin = std::max(blo, 1e-300);

  const double range = A.norm() / bmin + 1.0;
  auto count_below = [&](double sigma) { return negative_pivots(A - sigma * B); };

  Eigen::VectorXd values(n);
  for (int k = 1; k <= n; ++k) {
    double lo = -range, hi = range;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) >= k)
        hi = mid;
      else
        lo = mid;
      if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)) || hi - lo < 1e-300)
        break;
    }
    values(k - 1) = 0.5 * (lo + hi);
  }
  return values;
}

}  // namespace trimspec
