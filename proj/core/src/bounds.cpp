#include "trimspec/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace trimspec {

BoundReport bound_report(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat,
                         const std::vector<int>& small_rows) {
  const int n = static_cast<int>(K.rows());
  if (mhat.size() != n) throw std::invalid_argument("bound_report: size mismatch");
  for (int i = 0; i < n; ++i)
    if (!(mhat(i) > 0.0))
      throw std::invalid_argument("bound_report: nonpositive lumped mass entry");

  BoundReport rep;
  Eigen::VectorXd ratios = diag_ratios(K, mhat);
  rep.min_ratio = ratios.minCoeff(&rep.argmin);
  rep.max_ratio = ratios.maxCoeff(&rep.argmax);

  Eigen::VectorXd isqrt = mhat.cwiseSqrt().cwiseInverse();
  rep.infnorm_bound = 0.0;
  rep.c_pd = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    int nnz = 0;
    for (int j = 0; j < n; ++j) {
      if (K(i, j) == 0.0) continue;
      ++nnz;
      row += std::abs(K(i, j)) * isqrt(i) * isqrt(j);
    }
    rep.infnorm_bound = std::max(rep.infnorm_bound, row);
    rep.c_pd = std::max(rep.c_pd, nnz);
  }
  rep.sandwich_upper = rep.c_pd * rep.max_ratio;

  if (!small_rows.empty()) {
    const int m = static_cast<int>(small_rows.size());
    Eigen::MatrixXd Ks(m, m);
    Eigen::VectorXd ms(m);
    for (int a = 0; a < m; ++a) {
      ms(a) = mhat(small_rows[a]);
      for (int b = 0; b < m; ++b) Ks(a, b) = K(small_rows[a], small_rows[b]);
    }
    EigResult r = gen_eig_lumped(Ks, ms, {});
    if (!r.ok) throw std::runtime_error("bound_report: small-subpencil solve failed");
    rep.improved_lambda1_upper = r.values(0);
  }
  return rep;
}

SpectralReport spectral_report(const SystemMatrices& sys, const EigOptions& opts) {
  if (!sys.reduced)
    throw std::invalid_argument("spectral_report: apply boundary conditions first");
  SpectralReport rep;
  rep.n = sys.size();
  rep.deflated = sys.deflate;
  if (sys.deflate) {
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(sys.size());
    rep.kernel_residual = (sys.K * ones).norm() / std::max(sys.K.norm(), 1e-300);
  }

  EigResult lumped = sys.deflate ? deflate_kernel(sys.K, sys.mhat, opts)
                                 : gen_eig_lumped(sys.K, sys.mhat, opts);
  if (!lumped.ok) throw std::runtime_error("spectral_report: " + lumped.message);
  const int m = static_cast<int>(lumped.values.size());
  rep.lambda1_lumped = lumped.values(0);
  rep.lambdan_lumped = lumped.values(m - 1);
  rep.lambda1_below_floor =
      !(rep.lambda1_lumped > 1e3 * std::numeric_limits<double>::epsilon() * rep.lambdan_lumped);
  rep.dt_lumped = critical_dt(rep.lambdan_lumped);
  if (opts.want_vectors && lumped.vectors.size() > 0) {
    rep.vec1 = lumped.vectors.col(0);
    rep.vecn = lumped.vectors.col(m - 1);
    rep.residual1 = eig_residual(sys.K, sys.mhat, rep.lambda1_lumped, rep.vec1);
    rep.residualn = eig_residual(sys.K, sys.mhat, rep.lambdan_lumped, rep.vecn);
  }

  EigResult cons = gen_eig_consistent(sys.K, sys.M, {});
  rep.consistent_ok = cons.ok;
  if (cons.ok) {
    rep.lambdan_consistent = cons.values(cons.values.size() - 1);
    rep.dt_consistent = critical_dt(rep.lambdan_consistent);
  }
  return rep;
}

}  // namespace trimspec
