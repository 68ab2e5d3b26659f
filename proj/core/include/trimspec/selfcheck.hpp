#pragma once

#include <Eigen/Dense>

namespace trimspec {

/// Independent generalized-eigenvalue oracle for small symmetric pencils
/// (A, B) with B positive definite: each eigenvalue is isolated by bisection
/// on the inertia of A - sigma B (negative pivot count of an LDL^T sweep).
/// Shares no code path with the Jacobi/dense solvers. Intended for n <= ~16.
Eigen::VectorXd eig_inertia_bisection(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                      double rel_tol = 1e-12);

}  // namespace trimspec
