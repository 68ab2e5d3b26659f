#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "trimspec/assemble.hpp"
#include "trimspec/geometries.hpp"

using namespace trimspec;

namespace {

struct Assembled {
  GeometryCase geom;
  ActiveMesh mesh;
  ActiveBasisSet basis;
  SystemMatrices sys;
};

Assembled assemble_case(GeometryCase g, double gamma = 0.5) {
  Assembled a{std::move(g), {}, {}, {}};
  a.mesh = classify_elements(a.geom.space, a.geom.region);
  partition_good_bad(a.mesh, gamma);
  a.basis = active_basis(a.geom.space, a.mesh);
  a.sys = assemble(a.geom.space, a.mesh, a.basis, a.geom.region,
                   default_quad_order(a.geom.space));
  a.sys.mhat = lump_rowsum(a.sys);
  return a;
}

Assembled untrimmed_1d(int N, int p, int k) {
  GeometryCase g;
  g.family = "untrimmed";
  g.N = N;
  g.p = p;
  g.k = k;
  g.h = 1.0 / N;
  g.delta = 0.0;
  g.space = TensorSplineSpace({make_space(p, uniform_breakpoints(0.0, 1.0, N), k)});
  g.region = TrimRegion::interval(0.0, 1.0);
  g.boundary.side = {BC::Dirichlet, BC::Neumann, BC::Neumann, BC::Neumann};
  return assemble_case(std::move(g));
}

}  // namespace

TEST_CASE("linear elements reproduce the classic tridiagonal forms") {
  const int N = 8;
  const double h = 1.0 / N;
  const Assembled a = untrimmed_1d(N, 1, 0);
  const int n = a.sys.size();
  REQUIRE(n == N + 1);
  for (int i = 1; i < n - 1; ++i) {
    CHECK(a.sys.K(i, i) == doctest::Approx(2.0 / h).epsilon(1e-13));
    CHECK(a.sys.K(i, i - 1) == doctest::Approx(-1.0 / h).epsilon(1e-13));
    CHECK(a.sys.K(i, i + 1) == doctest::Approx(-1.0 / h).epsilon(1e-13));
    CHECK(a.sys.mhat(i) == doctest::Approx(h).epsilon(1e-13));
  }
  CHECK(a.sys.mhat(0) == doctest::Approx(h / 2).epsilon(1e-13));
  // diagonal ratios: interior 2/h^2
  const Eigen::VectorXd r = diag_ratios(a.sys.K, a.sys.mhat);
  CHECK(r(n / 2) == doctest::Approx(2.0 / (h * h)).epsilon(1e-13));
}

TEST_CASE("single Bezier element lumps to half-half") {
  GeometryCase g;
  g.space = TensorSplineSpace({make_space(1, uniform_breakpoints(0.0, 1.0, 1), 0)});
  g.region = TrimRegion::interval(0.0, 1.0);
  const Assembled a = assemble_case(std::move(g));
  REQUIRE(a.sys.size() == 2);
  CHECK(a.sys.mhat(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(a.sys.mhat(1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("mass sums to the domain measure") {
  for (const auto& g : {geometry_square_corner(8, 3, 2, 1e-3),
                        geometry_rotated_square(8, 2, 0, 1e-3, false),
                        geometry_plate_hole(2, 1, 1e-3)}) {
    const Assembled a = assemble_case(g);
    CHECK(a.sys.M.sum() ==
          doctest::Approx(a.mesh.domain_measure).epsilon(1e-12));
    CHECK(a.sys.mhat.sum() ==
          doctest::Approx(a.mesh.domain_measure).epsilon(1e-12));
  }
}

TEST_CASE("small-function entries follow the trim-parameter powers") {
  // a function vanishing to order kl+1 at the cut knot scales as
  // K_ii ~ delta^(2kl+1), mhat_i ~ delta^(kl+2), ratio ~ delta^(kl-1);
  // the last function always has kl = p-1, the first small one kl = k
  const int p = 3;
  for (int k : {0, 2}) {
    const int m = p - k;
    std::array<double, 2> kprev{}, mprev{};
    for (double delta : {1e-4, 1e-5}) {
      const Assembled a = assemble_case(geometry_1d_trim(64, p, k, delta));
      const int n = a.sys.size();
      const std::array<int, 2> idx{n - 1, n - m};       // local smoothness p-1, k
      const std::array<int, 2> kl{p - 1, k};
      for (int c = 0; c < 2; ++c) {
        const double kii = a.sys.K(idx[c], idx[c]), mi = a.sys.mhat(idx[c]);
        if (kprev[c] != 0.0) {
          CHECK(std::log10(kprev[c] / kii) ==
                doctest::Approx(2 * kl[c] + 1).epsilon(0.02));
          CHECK(std::log10(mprev[c] / mi) == doctest::Approx(kl[c] + 2).epsilon(0.02));
        }
        kprev[c] = kii;
        mprev[c] = mi;
      }
    }
  }
}

TEST_CASE("strong Dirichlet removes boundary lines") {
  // 1D: left boundary function removed
  {
    const Assembled a = untrimmed_1d(8, 2, 1);
    const SystemMatrices red = apply_dirichlet_strong(a.sys, a.geom.boundary,
                                                      a.geom.space, a.mesh, a.geom.region);
    CHECK(red.size() == a.sys.size() - 1);
    CHECK(red.active[0] == 1);
    CHECK(red.reduced);
    CHECK_THROWS_AS(lump_rowsum(red), std::invalid_argument);
  }
  // 2D: left+bottom tensor lines removed
  {
    const auto g = geometry_square_corner(8, 2, 1, 1e-3);
    const Assembled a = assemble_case(g);
    const SystemMatrices red = apply_dirichlet_strong(a.sys, a.geom.boundary,
                                                      a.geom.space, a.mesh, a.geom.region);
    for (int r = 0; r < red.size(); ++r) {
      const Idx2 mi = a.geom.space.multi_index(red.active[r]);
      CHECK(mi[0] > 0);
      CHECK(mi[1] > 0);
    }
    CHECK(a.sys.size() - red.size() ==
          a.geom.space.dir_dim(0) + a.geom.space.dir_dim(1) - 1);
  }
  // pure Neumann: nothing removed, deflation flagged, constants in the kernel
  {
    const auto g = geometry_rotated_square(8, 2, 1, 1e-3, false);
    const Assembled a = assemble_case(g);
    const SystemMatrices red = apply_dirichlet_strong(a.sys, a.geom.boundary,
                                                      a.geom.space, a.mesh, a.geom.region);
    CHECK(red.size() == a.sys.size());
    CHECK(red.deflate);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(red.size());
    CHECK((red.K * ones).norm() <= 1e-10 * red.K.norm());
  }
  // Dirichlet on a trimmed side is rejected
  {
    const auto g = geometry_1d_trim(64, 2, 1, 1e-4);
    const Assembled a = assemble_case(g);
    BoundarySpec bad;
    bad.side = {BC::Dirichlet, BC::Dirichlet, BC::Neumann, BC::Neumann};
    CHECK_THROWS_AS(
        apply_dirichlet_strong(a.sys, bad, a.geom.space, a.mesh, a.geom.region),
        std::invalid_argument);
  }
}

TEST_CASE("assembly rejects too-low quadrature orders") {
  const auto g = geometry_square_corner(8, 3, 2, 1e-3);
  ActiveMesh mesh = classify_elements(g.space, g.region);
  partition_good_bad(mesh, 0.5);
  const ActiveBasisSet basis = active_basis(g.space, mesh);
  CHECK_THROWS_AS(assemble(g.space, mesh, basis, g.region, QuadOrder{3, 9}),
                  std::invalid_argument);
  CHECK_THROWS_AS(assemble(g.space, mesh, basis, g.region, QuadOrder{5, 7}),
                  std::invalid_argument);
}

TEST_CASE("quadrature refinement leaves entries unchanged") {
  const auto g = geometry_house(16, 2, 1, 1e-4, false);
  ActiveMesh mesh = classify_elements(g.space, g.region);
  partition_good_bad(mesh, 0.5);
  std::vector<int> cut;
  for (int e : mesh.active)
    if (mesh.status[e] == ElemStatus::Cut) cut.push_back(e);
  std::mt19937 rng(5);
  std::shuffle(cut.begin(), cut.end(), rng);
  if (cut.size() > 20) cut.resize(20);
  const QuadOrder base = default_quad_order(g.space);
  const QuadOrder fine{2 * base.rect, 2 * base.triangle};
  for (int e : cut) {
    const auto [K0, M0] = element_integrals(g.space, mesh, g.region, e, base);
    const auto [K1, M1] = element_integrals(g.space, mesh, g.region, e, fine);
    // relative to the element block scale; delta-thin cells inherit an
    // eps*|x| coordinate rounding that tiny entries cannot beat
    const double ks = K1.diagonal().maxCoeff();
    const double ms = M1.diagonal().maxCoeff();
    CHECK((K0 - K1).cwiseAbs().maxCoeff() <= 1e-13 * ks);
    CHECK((M0 - M1).cwiseAbs().maxCoeff() <= 1e-13 * ms);
  }
}

TEST_CASE("entrywise Cauchy-Schwarz and sparsity cap") {
  const auto g = geometry_square_corner(12, 3, 2, 1e-3);
  const Assembled a = assemble_case(g);
  const auto& K = a.sys.K;
  int max_nnz = 0;
  for (int i = 0; i < K.rows(); ++i) {
    int nnz = 0;
    for (int j = 0; j < K.cols(); ++j) {
      if (K(i, j) == 0.0) continue;
      ++nnz;
      CHECK(std::abs(K(i, j)) <= std::sqrt(K(i, i) * K(j, j)) * (1.0 + 1e-12));
    }
    max_nnz = std::max(max_nnz, nnz);
  }
  CHECK(max_nnz <= 7 * 7);  // (2p+1)^2 for maximal smoothness
}

TEST_CASE("coordinate export format") {
  Eigen::MatrixXd A(2, 2);
  A << 1.5, 0.0, 0.0, -2.25;
  std::ostringstream os;
  export_coo(os, A);
  CHECK(os.str() == "2 2\n1 1 1.5\n2 2 -2.25\n");
}
