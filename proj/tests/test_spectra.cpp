#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trimspec/bounds.hpp"
#include "trimspec/eig.hpp"
#include "trimspec/geometries.hpp"
#include "trimspec/selfcheck.hpp"

using namespace trimspec;

namespace {

Eigen::MatrixXd random_spd(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd X(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = nd(rng);
  return X * X.transpose() + Eigen::MatrixXd::Identity(n, n);
}

SystemMatrices reduced_case(const GeometryCase& g, double gamma = 0.5) {
  ActiveMesh mesh = classify_elements(g.space, g.region);
  partition_good_bad(mesh, gamma);
  const ActiveBasisSet basis = active_basis(g.space, mesh);
  SystemMatrices sys =
      assemble(g.space, mesh, basis, g.region, default_quad_order(g.space));
  sys.mhat = lump_rowsum(sys);
  return apply_dirichlet_strong(sys, g.boundary, g.space, mesh, g.region);
}

}  // namespace

TEST_CASE("jacobi eigensolver basics") {
  Eigen::MatrixXd D = Eigen::Vector3d(3.0, 1.0, 2.0).asDiagonal();
  const EigResult r = sym_eig(D);
  CHECK(r.values(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.values(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.values(2) == doctest::Approx(3.0).epsilon(1e-15));

  Eigen::MatrixXd A(2, 2);
  A << 2.0, 1.0, 1.0, 2.0;
  const EigResult r2 = sym_eig(A, true);
  CHECK(r2.values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r2.values(1) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK((A * r2.vectors.col(0) - r2.values(0) * r2.vectors.col(0)).norm() <= 1e-14);

  const Eigen::MatrixXd S = random_spd(25, 1);
  const EigResult r3 = sym_eig(S);
  CHECK(r3.values.sum() == doctest::Approx(S.trace()).epsilon(1e-12));

  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(sym_eig(bad), std::invalid_argument);
}

TEST_CASE("jacobi keeps tiny eigenvalues of graded matrices accurate") {
  // A = D B D with a well-conditioned core: relative accuracy survives the
  // huge grading
  const int n = 6;
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) B(i, j) = 0.2 / (1.0 + std::abs(i - j));
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = std::pow(10.0, -3.0 * i);
  const Eigen::MatrixXd A = d.asDiagonal() * B * d.asDiagonal();
  const EigResult r = sym_eig(A);
  const Eigen::VectorXd oracle =
      eig_inertia_bisection(A, Eigen::MatrixXd::Identity(n, n), 1e-13);
  for (int i = 0; i < n; ++i)
    CHECK(r.values(i) == doctest::Approx(oracle(i)).epsilon(1e-9));
  CHECK(r.values(0) > 0.0);
  CHECK(r.values(0) < 1e-29);  // of order d_min^2
}

TEST_CASE("jacobi rescaling") {
  const Eigen::MatrixXd A = random_spd(10, 2);
  const Eigen::MatrixXd B = random_spd(10, 3);
  auto [DAD, DBD] = jacobi_rescale(A, B);
  for (int i = 0; i < 10; ++i)
    CHECK(DBD(i, i) == doctest::Approx(1.0).epsilon(1e-14));
  // identity B leaves A unchanged
  auto [A2, B2] = jacobi_rescale(A, Eigen::MatrixXd::Identity(10, 10));
  CHECK((A2 - A).norm() <= 1e-14 * A.norm());
  // eigenvalues are preserved by the rescaling
  const EigResult direct = gen_eig_consistent(A, B);
  const EigResult rescaled = gen_eig_consistent(DAD, DBD);
  for (int i = 0; i < 10; ++i)
    CHECK(direct.values(i) == doctest::Approx(rescaled.values(i)).epsilon(1e-12));
}

TEST_CASE("lumped generalized solve") {
  const Eigen::MatrixXd A = random_spd(8, 4);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(8);
  const EigResult plain = sym_eig(A);
  const EigResult viaI = gen_eig_lumped(A, ones);
  for (int i = 0; i < 8; ++i)
    CHECK(viaI.values(i) == doctest::Approx(plain.values(i)).epsilon(1e-13));
  // scaling the mass scales the spectrum inversely
  const EigResult scaled = gen_eig_lumped(A, 4.0 * ones);
  for (int i = 0; i < 8; ++i)
    CHECK(scaled.values(i) == doctest::Approx(plain.values(i) / 4.0).epsilon(1e-13));
}

TEST_CASE("small pencils match the inertia-bisection oracle") {
  // lumped P1 mass on N=4 with a left Dirichlet end: brute-force check
  GeometryCase g;
  g.space = TensorSplineSpace({make_space(1, uniform_breakpoints(0.0, 1.0, 4), 0)});
  g.region = TrimRegion::interval(0.0, 1.0);
  g.boundary.side = {BC::Dirichlet, BC::Neumann, BC::Neumann, BC::Neumann};
  const SystemMatrices red = reduced_case(g);
  REQUIRE(red.size() == 4);

  const Eigen::MatrixXd Bh = red.mhat.asDiagonal();
  const Eigen::VectorXd lumped_oracle = eig_inertia_bisection(red.K, Bh);
  const EigResult lumped = gen_eig_lumped(red.K, red.mhat);
  for (int i = 0; i < 4; ++i)
    CHECK(lumped.values(i) == doctest::Approx(lumped_oracle(i)).epsilon(1e-9));

  const Eigen::VectorXd cons_oracle = eig_inertia_bisection(red.K, red.M);
  const EigResult cons = gen_eig_consistent(red.K, red.M);
  for (int i = 0; i < 4; ++i)
    CHECK(cons.values(i) == doctest::Approx(cons_oracle(i)).epsilon(1e-9));

  // lumping lowers the top of the spectrum
  CHECK(lumped.values(3) <= cons.values(3) * (1.0 + 1e-12));
}

TEST_CASE("kernel deflation on the untrimmed pure-Neumann interval") {
  GeometryCase g;
  g.space = TensorSplineSpace({make_space(2, uniform_breakpoints(0.0, 1.0, 16), 1)});
  g.region = TrimRegion::interval(0.0, 1.0);
  // all Neumann
  const SystemMatrices red = reduced_case(g);
  CHECK(red.deflate);

  const EigResult plain = gen_eig_lumped(red.K, red.mhat);
  const EigResult defl = deflate_kernel(red.K, red.mhat);
  REQUIRE(defl.values.size() == plain.values.size() - 1);
  // first nonzero Neumann eigenvalue of the unit interval is pi^2
  CHECK(defl.values(0) == doctest::Approx(M_PI * M_PI).epsilon(0.05));
  // deflation removes the kernel and keeps the top untouched
  CHECK(defl.values(0) > 1e-8 * defl.values(defl.values.size() - 1));
  CHECK(defl.values(defl.values.size() - 1) ==
        doctest::Approx(plain.values(plain.values.size() - 1)).epsilon(1e-12));
}

TEST_CASE("critical time step") {
  CHECK(critical_dt(4.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(critical_dt(0.0), std::invalid_argument);
  CHECK_THROWS_AS(critical_dt(-1.0), std::invalid_argument);
  // lumping increases the critical step
  const double ln_lumped = 3.9, ln_consistent = 4.4;
  CHECK(critical_dt(ln_lumped) >= critical_dt(ln_consistent));
}

TEST_CASE("bound report orders its estimates") {
  const auto g = geometry_1d_trim(64, 3, 2, 1e-4);
  const SystemMatrices red = reduced_case(g);
  std::vector<int> small_rows{red.size() - 1};  // trim-side function
  const BoundReport rep = bound_report(red.K, red.mhat, small_rows);
  CHECK(rep.min_ratio <= rep.max_ratio);
  CHECK(rep.max_ratio <= rep.infnorm_bound * (1.0 + 1e-12));
  CHECK(rep.infnorm_bound <= rep.sandwich_upper * (1.0 + 1e-12));
  CHECK(rep.c_pd <= 7);  // 2p+1
  // improved bound: single small function -> its own ratio
  CHECK(rep.improved_lambda1_upper ==
        doctest::Approx(red.K(red.size() - 1, red.size() - 1) / red.mhat(red.size() - 1))
            .epsilon(1e-12));

  const SpectralReport spec = spectral_report(red);
  CHECK(rep.max_ratio <= spec.lambdan_lumped * (1.0 + 1e-10));
  CHECK(spec.lambdan_lumped <= rep.sandwich_upper * (1.0 + 1e-10));
  CHECK(spec.lambda1_lumped <= rep.improved_lambda1_upper * (1.0 + 1e-10));
  CHECK(spec.lambda1_lumped <= rep.min_ratio * (1.0 + 1e-10));
  CHECK(spec.lambdan_lumped <= spec.lambdan_consistent * (1.0 + 1e-10));
  // empty small set: improved bound degenerates to +infinity
  const BoundReport none = bound_report(red.K, red.mhat, {});
  CHECK(std::isinf(none.improved_lambda1_upper));
  CHECK(std::isfinite(none.min_ratio));
}

TEST_CASE("untrimmed 1D bound constants") {
  GeometryCase g;
  g.space = TensorSplineSpace({make_space(1, uniform_breakpoints(0.0, 1.0, 16), 0)});
  g.region = TrimRegion::interval(0.0, 1.0);
  g.boundary.side = {BC::Dirichlet, BC::Neumann, BC::Neumann, BC::Neumann};
  const SystemMatrices red = reduced_case(g);
  const BoundReport rep = bound_report(red.K, red.mhat, {});
  const double h = 1.0 / 16;
  CHECK(rep.max_ratio == doctest::Approx(2.0 / (h * h)).epsilon(1e-12));
  CHECK(rep.infnorm_bound == doctest::Approx(4.0 / (h * h)).epsilon(1e-12));
  CHECK(rep.c_pd == 3);
}

TEST_CASE("eigenpair residuals") {
  const auto g = geometry_1d_trim(32, 2, 1, 1e-3);
  const SystemMatrices red = reduced_case(g);
  EigOptions opts;
  opts.want_vectors = true;
  const SpectralReport rep = spectral_report(red, opts);
  CHECK(rep.residual1 <= 1e-10);
  CHECK(rep.residualn <= 1e-10);
  CHECK(rep.dt_lumped == doctest::Approx(2.0 / std::sqrt(rep.lambdan_lumped)).epsilon(1e-14));
}
