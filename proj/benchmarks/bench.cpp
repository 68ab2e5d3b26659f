#include <benchmark/benchmark.h>

#include <random>

#include "trimspec/assemble.hpp"
#include "trimspec/eig.hpp"
#include "trimspec/geometries.hpp"

namespace {

using namespace trimspec;

void BM_eval_basis_1d(benchmark::State& state) {
  const auto s = make_space(static_cast<int>(state.range(0)),
                            uniform_breakpoints(0.0, 1.0, 128), 0);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto _ : state) {
    const auto e = s.eval(unit(rng), 1);
    benchmark::DoNotOptimize(e.values.data());
  }
}
BENCHMARK(BM_eval_basis_1d)->Arg(2)->Arg(3)->Arg(5);

void BM_eval_basis_2d(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto f = make_space(p, uniform_breakpoints(0.0, 1.0, 16), p - 1);
  const TensorSplineSpace ts({f, f});
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto _ : state) {
    const auto e = ts.eval({unit(rng), unit(rng)}, 1);
    benchmark::DoNotOptimize(e.values.data());
  }
}
BENCHMARK(BM_eval_basis_2d)->Arg(2)->Arg(3);

void BM_classify_plate(benchmark::State& state) {
  const auto g = geometry_plate_hole(2, 1, 1e-3);
  for (auto _ : state) {
    auto mesh = classify_elements(g.space, g.region);
    benchmark::DoNotOptimize(mesh.domain_measure);
  }
}
BENCHMARK(BM_classify_plate);

void BM_assemble(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto g = geometry_square_corner(16, p, p - 1, 1e-3);
  ActiveMesh mesh = classify_elements(g.space, g.region);
  partition_good_bad(mesh, 0.5);
  const ActiveBasisSet basis = active_basis(g.space, mesh);
  const QuadOrder order = default_quad_order(g.space);
  for (auto _ : state) {
    auto sys = assemble(g.space, mesh, basis, g.region, order);
    benchmark::DoNotOptimize(sys.K.data());
  }
}
BENCHMARK(BM_assemble)->Arg(2)->Arg(3);

void BM_jacobi_eig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd X(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = nd(rng);
  const Eigen::MatrixXd A = X * X.transpose();
  for (auto _ : state) {
    const EigResult r = sym_eig(A);
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(BM_jacobi_eig)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
