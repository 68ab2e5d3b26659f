#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

namespace trimspec {

/// Eigenvalues ascending; vectors column-matched when requested.
struct EigResult {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // empty unless requested
  bool ok = true;
  std::string message;
  int sweeps = 0;
};

struct EigOptions {
  bool want_vectors = false;
  /// Problems up to this size use the cyclic Jacobi solver (high relative
  /// accuracy for small eigenvalues of graded positive definite matrices);
  /// larger ones fall back to a standard dense solver.
  int jacobi_max_n = 512;
};

/// Cyclic Jacobi for dense symmetric matrices. Rotations are applied while
/// any |a_ij| exceeds 1e-15 sqrt(a_ii a_jj); on exit the off-diagonal
/// Frobenius norm is below 1e-15 ||A||_F. Rejects inputs with symmetry defect
/// above 1e-12 ||A||.
EigResult sym_eig(const Eigen::MatrixXd& A, bool want_vectors = false);

/// Dispatches between sym_eig and the dense fallback by size.
EigResult sym_eig_auto(const Eigen::MatrixXd& A, const EigOptions& opts);

/// Two-sided diagonal rescaling (A,B) -> (DAD, DBD), D = diag(1/sqrt(B_ii)).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> jacobi_rescale(const Eigen::MatrixXd& A,
                                                           const Eigen::MatrixXd& B);

/// Generalized eigenvalues of (K, diag(mhat)) via the symmetric standard form
/// D K D with D = diag(1/sqrt(mhat)). Eigenvectors are mapped back to
/// coefficient space.
EigResult gen_eig_lumped(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const EigOptions& opts = {});

/// Generalized eigenvalues of (K, M) for symmetric positive definite M:
/// Jacobi rescaling, Cholesky of the rescaled M, then the standard problem on
/// L^-1 (DKD) L^-T. Reports failure (with a condition estimate) if the
/// Cholesky factorization breaks down.
EigResult gen_eig_consistent(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M,
                             const EigOptions& opts = {});

/// Spectrum of (K, diag(mhat)) restricted to the B-orthogonal complement of
/// the all-ones coefficient vector (pure-Neumann kernel). The projected-out
/// zero eigenvalue is dropped. Requires ||K 1|| <= 1e-10 ||K||_F.
EigResult deflate_kernel(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const EigOptions& opts = {});

/// Critical time step 2/sqrt(lambda_n) of the undamped central difference
/// scheme.
double critical_dt(double lambda_n);

/// Relative residual ||K x - lambda B x|| / (||K||_F ||x||) with B = diag(b).
double eig_residual(const Eigen::MatrixXd& K, const Eigen::VectorXd& b, double lambda,
                    const Eigen::VectorXd& x);

}  // namespace trimspec
