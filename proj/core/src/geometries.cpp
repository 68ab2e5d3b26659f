#include "trimspec/geometries.hpp"

#include <cmath>
#include <stdexcept>

namespace trimspec {

namespace {

TensorSplineSpace unit_space(int dims, int N, int p, int k) {
  const auto bp = uniform_breakpoints(0.0, 1.0, N);
  std::vector<SplineSpace1D> factors;
  for (int d = 0; d < dims; ++d) factors.push_back(make_space(p, bp, k));
  return TensorSplineSpace(std::move(factors));
}

void check_delta(double delta, double upper, const char* family) {
  if (!(delta > 0.0) || !(delta < upper))
    throw std::invalid_argument(std::string(family) + ": delta out of range");
}

double hole_sagitta(double delta) { return std::min(1e-2 * delta, 1e-6); }

}  // namespace

GeometryCase geometry_1d_trim(int N, int p, int k, double delta) {
  GeometryCase g;
  g.family = "1d_trim";
  g.N = N;
  g.p = p;
  g.k = k;
  g.h = 1.0 / N;
  check_delta(delta, g.h, "1d_trim");
  g.delta = delta;
  g.space = unit_space(1, N, p, k);
  g.region = TrimRegion::interval(0.0, 1.0 - g.h + delta);
  g.boundary.side = {BC::Dirichlet, BC::Neumann, BC::Neumann, BC::Neumann};
  return g;
}

GeometryCase geometry_square_corner(int N, int p, int k, double delta) {
  GeometryCase g;
  g.family = "square_corner";
  g.N = N;
  g.p = p;
  g.k = k;
  g.h = 1.0 / N;
  check_delta(delta, g.h, "square_corner");
  g.delta = delta;
  g.space = unit_space(2, N, p, k);
  const double L = 1.0 - g.h + delta;
  g.region = TrimRegion::planar(Region::box({0.0, 0.0}, {L, L}));
  g.boundary.side = {BC::Dirichlet, BC::Neumann, BC::Dirichlet, BC::Neumann};
  return g;
}

GeometryCase geometry_house(int N, int p, int k, double delta, bool wide) {
  GeometryCase g;
  g.family = wide ? "house_wide" : "house";
  g.N = N;
  g.p = p;
  g.k = k;
  g.h = 1.0 / N;
  if (N % 4 != 0) throw std::invalid_argument("house: N must be divisible by 4");
  check_delta(delta, 0.5 * g.h, "house");
  g.delta = delta;
  g.space = unit_space(2, N, p, k);

  const double apex_x = wide ? 0.5 + 0.5 * g.h : 0.5;
  const double apex_y = 0.75 + delta;  // ridge pokes delta above the 3N/4 grid line
  const double wall_left = apex_y - apex_x;
  const double wall_right = apex_y - (1.0 - apex_x);
  g.region = TrimRegion::planar(Region::convex_polygon({{0.0, 0.0},
                                                        {1.0, 0.0},
                                                        {1.0, wall_right},
                                                        {apex_x, apex_y},
                                                        {0.0, wall_left}}));
  g.boundary.side = {BC::Neumann, BC::Neumann, BC::Dirichlet, BC::Neumann};
  return g;
}

GeometryCase geometry_rotated_square(int N, int p, int k, double delta, bool shifted) {
  GeometryCase g;
  g.family = "rotated_square";
  g.N = N;
  g.p = p;
  g.k = k;
  g.h = 1.0 / N;
  if (N % 8 != 0) throw std::invalid_argument("rotated_square: N must be divisible by 8");
  check_delta(delta, 0.5 * g.h, "rotated_square");
  g.delta = delta;
  g.space = unit_space(2, N, p, k);

  const double cx = shifted ? 0.5 + 0.5 * g.h : 0.5;
  const double cy = 0.5;
  const double r = 0.375 + delta;  // corners poke delta past grid lines
  g.region = TrimRegion::planar(Region::convex_polygon(
      {{cx + r, cy}, {cx, cy + r}, {cx - r, cy}, {cx, cy - r}}));
  g.boundary.side = {BC::Neumann, BC::Neumann, BC::Neumann, BC::Neumann};
  return g;
}

GeometryCase geometry_plate_hole(int p, int k, double delta) {
  GeometryCase g;
  g.family = "plate_hole";
  g.N = 20;
  g.p = p;
  g.k = k;
  g.h = 1.0 / 20;
  if (!(delta > 0.0) || !(delta > 0.0 && delta <= 0.25 * g.h))
    throw std::invalid_argument("plate_hole: delta out of range");
  g.delta = delta;
  g.space = unit_space(2, 20, p, k);

  const double r_in = std::sqrt(0.2 * 0.2 + g.h * g.h) - delta;
  const double r_corner = 0.25 - delta;
  const double sag = hole_sagitta(delta);
  Region region = Region::box({0.0, 0.0}, {1.0, 1.0})
                      .with_hole({0.5, 0.5}, r_in, sag)
                      .with_hole({0.0, 0.0}, r_corner, sag)
                      .with_hole({1.0, 0.0}, r_corner, sag)
                      .with_hole({0.0, 1.0}, r_corner, sag)
                      .with_hole({1.0, 1.0}, r_corner, sag);
  g.region = TrimRegion::planar(std::move(region));
  g.boundary.side = {BC::Dirichlet, BC::Dirichlet, BC::Dirichlet, BC::Dirichlet};
  return g;
}

std::vector<GeometryInfo> list_geometries() {
  return {
      {"1d_trim", "N>=2 (default 128), p in [1,5], k in [0,p-1], 0<delta<1/N",
       "interval (0, 1-h+delta), Dirichlet left"},
      {"square_corner", "N (default 16), p, k, 0<delta<1/N",
       "square (0, 1-h+delta)^2, Dirichlet left+bottom"},
      {"house", "N divisible by 4 (default 16), p, k, 0<delta<h/2",
       "pentagon with 45-degree roof, ridge on a vertical grid line, Dirichlet bottom"},
      {"house_wide", "N divisible by 4 (default 16), p, k, 0<delta<h/2",
       "house variant with the ridge between vertical grid lines, Dirichlet bottom"},
      {"rotated_square", "N divisible by 8 (default 16), p, k, 0<delta<h/2, shifted=0|1",
       "45-degree square, pure Neumann with kernel deflation"},
      {"plate_hole", "N fixed at 20, p, k, 0<delta<=h/4",
       "unit square minus central disc and four corner discs, Dirichlet on all edges"},
  };
}

GeometryCase make_geometry(const std::string& family, int N, int p, int k, double delta,
                           bool shifted) {
  if (family == "1d_trim") return geometry_1d_trim(N > 0 ? N : 128, p, k, delta);
  if (family == "square_corner") return geometry_square_corner(N > 0 ? N : 16, p, k, delta);
  if (family == "house") return geometry_house(N > 0 ? N : 16, p, k, delta, false);
  if (family == "house_wide") return geometry_house(N > 0 ? N : 16, p, k, delta, true);
  if (family == "rotated_square")
    return geometry_rotated_square(N > 0 ? N : 16, p, k, delta, shifted);
  if (family == "plate_hole") {
    if (N > 0 && N != 20)
      throw std::invalid_argument("plate_hole: N is fixed at 20");
    return geometry_plate_hole(p, k, delta);
  }
  throw std::invalid_argument("unknown geometry family: " + family);
}

}  // namespace trimspec
