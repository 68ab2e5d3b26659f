#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "trimspec/knots.hpp"
#include "trimspec/tensor_space.hpp"

using namespace trimspec;

TEST_CASE("space dimensions") {
  // linear FEM hats
  const std::vector<double> bp{0.0, 0.5, 1.0};
  CHECK(make_space(1, bp, 0).dim() == 3);
  // fine maximal-smoothness quintic space
  CHECK(make_space(5, uniform_breakpoints(0.0, 1.0, 128), 4).dim() == 133);
  // single Bezier element
  const std::vector<double> two{0.0, 1.0};
  CHECK(make_space(3, two, 2).dim() == 4);
  CHECK(make_space(3, two, 0).dim() == 4);

  CHECK_THROWS_AS(make_space(3, bp, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_space(3, bp, -1), std::invalid_argument);
  const std::vector<double> bad{0.0, 0.5, 0.5, 1.0};
  CHECK_THROWS_AS(make_space(2, bad, 1), std::invalid_argument);
}

TEST_CASE("local smoothness is degree minus multiplicity") {
  const auto bp = uniform_breakpoints(0.0, 1.0, 8);
  CHECK(make_space(5, bp, 4).local_smoothness(1) == 4);
  CHECK(make_space(5, bp, 0).local_smoothness(3) == 0);
  const auto s = make_space(3, bp, 1);
  CHECK(s.local_smoothness(2) == 1);
  // oracle: count repeated knots in the constructed vector
  int reps = 0;
  for (double t : s.knot_vector().knots)
    if (t == bp[2]) ++reps;
  CHECK(s.degree() - reps == 1);
  CHECK_THROWS_AS(s.local_smoothness(0), std::out_of_range);
  CHECK_THROWS_AS(s.local_smoothness(8), std::out_of_range);
}

TEST_CASE("support intervals") {
  const std::vector<double> bp{0.0, 0.5, 1.0};
  const auto s = make_space(1, bp, 0);
  CHECK(s.support_interval(1) == std::pair{0.0, 1.0});
  CHECK(s.support_interval(0) == std::pair{0.0, 0.5});
  // first function of any open vector spans up to knot p+1
  const auto c = make_space(3, uniform_breakpoints(0.0, 1.0, 8), 2);
  CHECK(c.support_interval(0).first == 0.0);
  CHECK(c.support_interval(0).second == c.knot_vector().knots[4]);
  // interior cubic support spans 4 elements of length h
  const auto m = make_space(3, uniform_breakpoints(0.0, 1.0, 16), 2);
  const auto sup = m.support_interval(8);
  CHECK(sup.second - sup.first == doctest::Approx(4.0 / 16.0).epsilon(1e-15));
  CHECK_THROWS_AS(m.support_interval(m.dim()), std::out_of_range);
}

TEST_CASE("hat function evaluation") {
  const std::vector<double> bp{0.0, 0.5, 1.0};
  const auto s = make_space(1, bp, 0);
  const auto e = s.eval(0.25, 1);
  REQUIRE(e.values.size() == 2);
  CHECK(e.first_index == 0);
  CHECK(e.values[0] == doctest::Approx(0.5).epsilon(1e-15));  // left hat
  CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-15));  // middle hat
  CHECK(e.derivs[0] == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(e.derivs[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(s.eval(1.5, 0), std::out_of_range);
}

TEST_CASE("quadratic value at an interior knot is one half") {
  const auto s = make_space(2, uniform_breakpoints(0.0, 5.0, 5), 1);
  // function with uniform knots {1,2,3,4}: value 1/2 at its knot 2
  const auto e = s.eval(2.0, 0);
  const int local = 3 - e.first_index;  // global index 3 has support [1,4]
  REQUIRE(local >= 0);
  REQUIRE(local < 3);
  CHECK(e.values[local] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("partition of unity, nonnegativity, local support") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int p = 1; p <= 5; ++p) {
    for (int k : {0, p - 1}) {
      const auto s = make_space(p, uniform_breakpoints(0.0, 1.0, 13), k);
      for (int t = 0; t < 2000; ++t) {
        const auto e = s.eval(unit(rng), 0);
        CHECK(static_cast<int>(e.values.size()) == p + 1);
        double sum = 0.0;
        for (double v : e.values) {
          sum += v;
          CHECK(v >= -1e-15);
        }
        CHECK(std::abs(sum - 1.0) <= 1e-13);
      }
      // knots evaluate from the right, final knot from the left
      CHECK(s.eval(0.0, 0).element == 0);
      CHECK(s.eval(1.0, 0).element == 12);
    }
  }
}

TEST_CASE("derivatives match centered differences") {
  const auto s = make_space(4, uniform_breakpoints(0.0, 1.0, 9), 2);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  const double step = 1e-6;
  for (int t = 0; t < 300; ++t) {
    double x = unit(rng);
    // keep away from breakpoints
    if (std::abs(x * 9.0 - std::round(x * 9.0)) < 0.02) continue;
    const auto em = s.eval(x - step, 0);
    const auto ep = s.eval(x + step, 0);
    const auto e = s.eval(x, 1);
    REQUIRE(em.first_index == e.first_index);
    REQUIRE(ep.first_index == e.first_index);
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      const double fd = (ep.values[i] - em.values[i]) / (2.0 * step);
      CHECK(e.derivs[i] == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

namespace {

// exact polynomial restriction of every local function on the element
// adjacent to x0 on the given side, as monomial coefficients in t=(x-x0)/h
Eigen::MatrixXd side_poly_coeffs(const SplineSpace1D& s, int elem, double x0, double h,
                                 int first_expected) {
  const int p = s.degree();
  const int n = p + 1;
  Eigen::MatrixXd V(n, n);
  Eigen::MatrixXd F(n, n);
  auto [a, b] = s.element(elem);
  for (int q = 0; q < n; ++q) {
    const double x = a + (b - a) * (q + 0.5) / n;
    const double t = (x - x0) / h;
    for (int c = 0; c < n; ++c) V(q, c) = std::pow(t, c);
    const auto e = s.eval(x, 0);
    REQUIRE(e.first_index == first_expected);
    for (int f = 0; f < n; ++f) F(q, f) = e.values[f];
  }
  return V.fullPivLu().solve(F);  // column f: coefficients of local function f
}

}  // namespace

TEST_CASE("inter-element smoothness matches the knot multiplicity") {
  const int p = 4;
  for (int k : {0, 1, 3}) {
    const auto s = make_space(p, uniform_breakpoints(0.0, 1.0, 6), k);
    const int bi = 3;  // interior breakpoint
    const double x0 = 0.5;
    const double h = 1.0 / 6.0;
    CHECK(s.local_smoothness(bi) == k);
    // functions present on both sides: right element's local set
    const auto eright = s.eval(x0, 0);
    const int first = eright.first_index;
    const Eigen::MatrixXd right = side_poly_coeffs(s, bi, x0, h, first);
    // left element shares the functions [first, ...] only partially; evaluate
    // and match by global index
    auto [la, lb] = s.element(bi - 1);
    const auto eleft = s.eval(0.5 * (la + lb), 0);
    Eigen::MatrixXd left = Eigen::MatrixXd::Zero(p + 1, p + 1);
    {
      const int n = p + 1;
      Eigen::MatrixXd V(n, n), F = Eigen::MatrixXd::Zero(n, n);
      for (int q = 0; q < n; ++q) {
        const double x = la + (lb - la) * (q + 0.5) / n;
        const double t = (x - x0) / h;
        for (int c = 0; c < n; ++c) V(q, c) = std::pow(t, c);
        const auto e = s.eval(x, 0);
        for (int f = 0; f < n; ++f) {
          const int g = e.first_index + f;  // global index
          const int col = g - first;        // column in the right-side table
          if (col >= 0 && col <= p) F(q, col) = e.values[f];
        }
      }
      left = V.fullPivLu().solve(F);
    }
    // derivative jumps: coefficient differences in t-units
    double max_low = 0.0, max_next = 0.0;
    for (int f = 0; f <= p; ++f) {
      for (int r = 0; r <= k; ++r)
        max_low = std::max(max_low, std::abs(right(r, f) - left(r, f)));
      max_next = std::max(max_next, std::abs(right(k + 1, f) - left(k + 1, f)));
    }
    CHECK(max_low <= 1e-8);
    CHECK(max_next >= 1e-3);
  }
}

TEST_CASE("tensor indexing bijection") {
  const auto f = make_space(2, uniform_breakpoints(0.0, 1.0, 1), 1);  // dim 3
  const TensorSplineSpace ts({f, f});
  REQUIRE(ts.dim() == 9);
  CHECK(ts.linear_index({0, 0}) == 0);
  CHECK(ts.linear_index({2, 2}) == 8);
  for (int i = 0; i < 9; ++i) CHECK(ts.linear_index(ts.multi_index(i)) == i);
  CHECK_THROWS_AS(ts.linear_index({3, 0}), std::out_of_range);
  CHECK_THROWS_AS(ts.multi_index(9), std::out_of_range);
}

TEST_CASE("tensor evaluation") {
  const auto f = make_space(1, uniform_breakpoints(0.0, 1.0, 4), 0);
  const TensorSplineSpace ts({f, f});
  // bilinear values at an element center are all 1/4
  const auto e = ts.eval({0.125, 0.625}, 1);
  REQUIRE(e.values.size() == 4);
  for (double v : e.values) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));
  // gradient of the constant combination vanishes
  double gx = 0.0, gy = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    sum += e.values[i];
    gx += e.grads[i][0];
    gy += e.grads[i][1];
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(gx) <= 1e-13);
  CHECK(std::abs(gy) <= 1e-13);

  // partition of unity at random points for a mixed-degree space
  const TensorSplineSpace mixed(
      {make_space(3, uniform_breakpoints(0.0, 1.0, 7), 1),
       make_space(2, uniform_breakpoints(0.0, 1.0, 5), 0)});
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 3000; ++t) {
    const auto ev = mixed.eval({unit(rng), unit(rng)}, 0);
    double sum2 = 0.0;
    for (double v : ev.values) sum2 += v;
    CHECK(std::abs(sum2 - 1.0) <= 1e-13);
  }
}
