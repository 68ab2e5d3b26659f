#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "trimspec/assemble.hpp"
#include "trimspec/eig.hpp"

namespace trimspec {

/// Algebraic bounds on the extreme generalized eigenvalues of (K, Mhat):
/// the diagonal Rayleigh ratios, the scaled infinity-norm bound, the sandwich
/// constant from the measured row sparsity, and the subspace upper bound on
/// the smallest eigenvalue restricted to the small basis functions.
struct BoundReport {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double infnorm_bound = 0.0;
  int c_pd = 0;  // measured max nonzeros per row of K
  double sandwich_upper = 0.0;
  double improved_lambda1_upper = std::numeric_limits<double>::infinity();
  int argmin = -1;  // rows of the reduced system
  int argmax = -1;
};

/// `small_rows` lists the reduced rows of the small basis functions; the
/// improved bound is the smallest eigenvalue of that principal subpencil
/// (+infinity when the set is empty).
BoundReport bound_report(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const std::vector<int>& small_rows);

/// Extreme generalized eigenvalues of (K, Mhat) and (K, M) with the derived
/// critical time steps.
struct SpectralReport {
  int n = 0;
  double lambda1_lumped = 0.0;
  double lambdan_lumped = 0.0;
  double lambdan_consistent = std::numeric_limits<double>::quiet_NaN();
  bool consistent_ok = false;
  bool deflated = false;
  bool lambda1_below_floor = false;
  double dt_lumped = 0.0;
  double dt_consistent = std::numeric_limits<double>::quiet_NaN();
  double residual1 = std::numeric_limits<double>::quiet_NaN();
  double residualn = std::numeric_limits<double>::quiet_NaN();
  double kernel_residual = std::numeric_limits<double>::quiet_NaN();  // pure Neumann
  Eigen::VectorXd vec1, vecn;  // lumped extreme eigenvectors when requested
};

/// Any computed lambda1 below 1e3 * eps * lambdan is flagged as below the
/// round-off noise floor.
SpectralReport spectral_report(const SystemMatrices& reduced, const EigOptions& opts = {});

}  // namespace trimspec
