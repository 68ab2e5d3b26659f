#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trimspec/quadrature.hpp"

using namespace trimspec;

TEST_CASE("textbook rules") {
  const GaussRule r1 = gauss_rule(1);
  CHECK(r1.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const GaussRule r2 = gauss_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(33), std::invalid_argument);
}

TEST_CASE("polynomial exactness on the reference interval") {
  // int_{-1}^{1} x^6 dx = 2/7 with q = 4
  const GaussRule r = gauss_rule(4);
  double s = 0.0;
  for (int i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 6);
  CHECK(std::abs(s - 2.0 / 7.0) <= 1e-15);

  // degree 2q-1 exact, degree 2q not
  for (int q = 1; q <= 8; ++q) {
    const GaussRule g = gauss_rule(q);
    const int d = 2 * q;  // even degree: exact integral 2/(d+1)
    double v = 0.0;
    for (int i = 0; i < g.size(); ++i) v += g.weights[i] * std::pow(g.nodes[i], d - 2);
    CHECK(v == doctest::Approx(2.0 / (d - 1)).epsilon(1e-13));
  }
}

TEST_CASE("node accuracy against high-precision q=5 values") {
  const GaussRule r = gauss_rule(5);
  CHECK(std::abs(r.nodes[4] - 0.90617984593866399280) <= 1e-15);
  CHECK(std::abs(r.nodes[3] - 0.53846931010568309104) <= 1e-15);
  CHECK(std::abs(r.weights[2] - 128.0 / 225.0) <= 1e-15);
}

TEST_CASE("rectangle rule integrates tensor polynomials") {
  const GaussRule r = gauss_rule(3);
  const auto pts = map_rectangle(r, r, {0.25, -1.0}, {0.75, 2.0});
  double s = 0.0, area = 0.0;
  for (const auto& p : pts) {
    area += p.w;
    s += p.w * p.x[0] * p.x[0] * p.x[1];
  }
  CHECK(area == doctest::Approx(1.5).epsilon(1e-14));
  // int x^2 over [.25,.75] = (0.75^3 - 0.25^3)/3; int y over [-1,2] = 1.5
  CHECK(s == doctest::Approx((std::pow(0.75, 3) - std::pow(0.25, 3)) / 3.0 * 1.5)
                 .epsilon(1e-14));
}

TEST_CASE("triangle rule matches the split rectangle") {
  const GaussRule rect = gauss_rule(4);
  const GaussRule tri = gauss_rule(9);  // covers total degree 2*4 with margin
  auto f = [](double x, double y) {
    return 1.0 + x * y + x * x * y * y + std::pow(x, 3) * y;
  };
  const std::array<double, 2> lo{0.2, 0.3}, hi{0.9, 1.1};
  double s_rect = 0.0;
  for (const auto& p : map_rectangle(rect, rect, lo, hi)) s_rect += p.w * f(p.x[0], p.x[1]);
  double s_tri = 0.0;
  for (const auto& p :
       map_triangle(tri, lo, {hi[0], lo[1]}, hi))
    s_tri += p.w * f(p.x[0], p.x[1]);
  for (const auto& p :
       map_triangle(tri, lo, hi, {lo[0], hi[1]}))
    s_tri += p.w * f(p.x[0], p.x[1]);
  CHECK(s_tri == doctest::Approx(s_rect).epsilon(1e-14));
}
