#include "trimspec/eig.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trimspec {

namespace {

void sort_ascending(EigResult& r) {
  const int n = static_cast<int>(r.values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return r.values(a) < r.values(b); });
  Eigen::VectorXd v(n);
  Eigen::MatrixXd V;
  if (r.vectors.size() > 0) V.resize(r.vectors.rows(), n);
  for (int i = 0; i < n; ++i) {
    v(i) = r.values(order[i]);
    if (V.size() > 0) V.col(i) = r.vectors.col(order[i]);
  }
  r.values = std::move(v);
  if (V.size() > 0) r.vectors = std::move(V);
}

double off_frobenius(const Eigen::MatrixXd& A) {
  double s = 0.0;
  for (int j = 0; j < A.cols(); ++j)
    for (int i = 0; i < A.rows(); ++i)
      if (i != j) s += A(i, j) * A(i, j);
  return std::sqrt(s);
}

}  // namespace

EigResult sym_eig(const Eigen::MatrixXd& A_in, bool want_vectors) {
  const int n = static_cast<int>(A_in.rows());
  if (A_in.cols() != n) throw std::invalid_argument("sym_eig: matrix must be square");
  const double scale = A_in.cwiseAbs().maxCoeff();
  if ((A_in - A_in.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument("sym_eig: matrix is not symmetric");

  Eigen::MatrixXd A = 0.5 * (A_in + A_in.transpose());
  EigResult out;
  out.values.resize(n);
  if (want_vectors) out.vectors = Eigen::MatrixXd::Identity(n, n);
  if (n == 1) {
    out.values(0) = A(0, 0);
    return out;
  }

  // Rotate while any off-diagonal entry is large relative to its own
  // diagonal pair; this keeps tiny eigenvalues of graded positive definite
  // matrices accurate in the relative sense.
  constexpr double rel_tol = 1e-15;
  constexpr int max_sweeps = 60;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int q = 1; q < n; ++q) {
      for (int p = 0; p < q; ++p) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double app = A(p, p), aqq = A(q, q);
        const double bound = std::sqrt(std::abs(app)) * std::sqrt(std::abs(aqq));
        if (std::abs(apq) <= rel_tol * bound) continue;
        rotated = true;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // rows/columns p and q
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const double vkp = out.vectors(k, p), vkq = out.vectors(k, q);
            out.vectors(k, p) = c * vkp - s * vkq;
            out.vectors(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    if (!rotated) break;
  }
  out.sweeps = sweep;
  if (sweep == max_sweeps) {
    out.ok = false;
    out.message = "sym_eig: Jacobi sweeps did not converge";
  }
  const double off = off_frobenius(A);
  if (off > 1e-15 * std::max(A.norm(), 1e-300)) {
    out.ok = false;
    out.message = "sym_eig: off-diagonal norm above threshold";
  }
  out.values = A.diagonal();
  sort_ascending(out);
  return out;
}

EigResult sym_eig_auto(const Eigen::MatrixXd& A, const EigOptions& opts) {
  if (A.rows() <= opts.jacobi_max_n) return sym_eig(A, opts.want_vectors);
  EigResult out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      A, opts.want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    out.ok = false;
    out.message = "sym_eig_auto: dense solver failed";
    return out;
  }
  out.values = es.eigenvalues();
  if (opts.want_vectors) out.vectors = es.eigenvectors();
  return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> jacobi_rescale(const Eigen::MatrixXd& A,
                                                           const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(B.rows());
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    if (!(B(i, i) > 0.0))
      throw std::invalid_argument("jacobi_rescale: nonpositive diagonal in B");
    d(i) = 1.0 / std::sqrt(B(i, i));
  }
  return {d.asDiagonal() * A * d.asDiagonal(), d.asDiagonal() * B * d.asDiagonal()};
}

EigResult gen_eig_lumped(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const EigOptions& opts) {
  const int n = static_cast<int>(K.rows());
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    if (!(mhat(i) > 0.0))
      throw std::invalid_argument("gen_eig_lumped: nonpositive lumped mass entry");
    d(i) = 1.0 / std::sqrt(mhat(i));
  }
  Eigen::MatrixXd A(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) A(i, j) = K(i, j) * d(i) * d(j);
  EigResult r = sym_eig_auto(A, opts);
  if (opts.want_vectors && r.vectors.size() > 0)
    r.vectors = d.asDiagonal() * r.vectors;
  return r;
}

EigResult gen_eig_consistent(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M,
                             const EigOptions& opts) {
  auto [DKD, DMD] = jacobi_rescale(K, M);
  Eigen::LLT<Eigen::MatrixXd> llt(DMD);
  if (llt.info() != Eigen::Success) {
    EigResult r;
    r.ok = false;
    // rough conditioning hint from the rescaled diagonal dominance
    const double mx = DMD.cwiseAbs().maxCoeff();
    r.message = "gen_eig_consistent: Cholesky failed (rescaled mass numerically "
                "singular, max |entry| = " +
                std::to_string(mx) + ")";
    return r;
  }
  const Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd W = L.triangularView<Eigen::Lower>().solve(DKD);
  Eigen::MatrixXd C =
      L.triangularView<Eigen::Lower>().solve(W.transpose()).transpose();
  C = 0.5 * (C + C.transpose()).eval();
  EigResult r = sym_eig_auto(C, opts);
  if (opts.want_vectors && r.vectors.size() > 0) {
    Eigen::MatrixXd Y =
        L.transpose().triangularView<Eigen::Upper>().solve(r.vectors);
    const int n = static_cast<int>(M.rows());
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = 1.0 / std::sqrt(M(i, i));
    r.vectors = d.asDiagonal() * Y;
  }
  return r;
}

EigResult deflate_kernel(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const EigOptions& opts) {
  const int n = static_cast<int>(K.rows());
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const double res = (K * ones).norm();
  if (res > 1e-10 * std::max(K.norm(), 1e-300))
    throw std::runtime_error("deflate_kernel: all-ones vector is not in the kernel");

  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    if (!(mhat(i) > 0.0))
      throw std::invalid_argument("deflate_kernel: nonpositive lumped mass entry");
    d(i) = 1.0 / std::sqrt(mhat(i));
  }
  Eigen::MatrixXd A(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) A(i, j) = K(i, j) * d(i) * d(j);
  // kernel direction of the standard form
  Eigen::VectorXd v = mhat.cwiseSqrt();
  v /= v.norm();
  Eigen::VectorXd w = A * v;
  const double vAv = v.dot(w);
  Eigen::MatrixXd P = A;
  P.noalias() -= v * w.transpose();
  P.noalias() -= w * v.transpose();
  P.noalias() += (vAv)*v * v.transpose();
  P = 0.5 * (P + P.transpose()).eval();

  EigOptions o = opts;
  EigResult r = sym_eig_auto(P, o);
  if (!r.ok) return r;
  // drop the projected-out direction: the eigenvalue of smallest magnitude
  int drop = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(r.values(i)) < std::abs(r.values(drop))) drop = i;
  EigResult out;
  out.ok = r.ok;
  out.sweeps = r.sweeps;
  out.values.resize(n - 1);
  if (opts.want_vectors) out.vectors.resize(n, n - 1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    out.values(k) = r.values(i);
    if (opts.want_vectors) out.vectors.col(k) = d.asDiagonal() * r.vectors.col(i);
    ++k;
  }
  return out;
}

double critical_dt(double lambda_n) {
  if (!(lambda_n > 0.0)) throw std::invalid_argument("critical_dt: lambda_n must be > 0");
  return 2.0 / std::sqrt(lambda_n);
}

double eig_residual(const Eigen::MatrixXd& K, const Eigen::VectorXd& b, double lambda,
                    const Eigen::VectorXd& x) {
  const Eigen::VectorXd r = K * x - lambda * b.asDiagonal() * x;
  return r.norm() / (std::max(K.norm(), 1e-300) * x.norm());
}

}  // namespace trimspec
