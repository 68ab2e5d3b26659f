#pragma once

#include <string>
#include <vector>

#include "trimspec/assemble.hpp"
#include "trimspec/region.hpp"
#include "trimspec/tensor_space.hpp"

namespace trimspec {

/// One fully specified discretized trimming setup.
struct GeometryCase {
  std::string family;
  int N = 0;
  int p = 0;
  int k = 0;
  double delta = 0.0;
  double h = 0.0;
  TensorSplineSpace space;
  TrimRegion region;
  BoundarySpec boundary;
};

/// Omega = (0, 1-h+delta) inside (0,1): the last element keeps measure delta.
/// Dirichlet on the left end. Requires 0 < delta < h.
GeometryCase geometry_1d_trim(int N, int p, int k, double delta);

/// Omega = (0, 1-h+delta)^2: slab cuts along the top and right plus the
/// trimmed corner. Dirichlet on the left and bottom edges.
GeometryCase geometry_square_corner(int N, int p, int k, double delta);

/// House-shaped pentagon with a 45-degree roof whose ridge pokes delta above
/// a horizontal grid line. Narrow: the apex sits on a vertical grid line and
/// the tip is split into two symmetric triangles. Wide: the apex sits between
/// vertical grid lines. Dirichlet on the bottom edge. Requires N divisible by
/// 4 and 0 < delta < h/2.
GeometryCase geometry_house(int N, int p, int k, double delta, bool wide);

/// Square rotated 45 degrees, centered at (0.5, 0.5) with half-diagonal
/// 3/8 + delta so each corner pokes delta past a grid line. Shifted moves the
/// center right by h/2 to keep corner tips off the vertical grid lines. Pure
/// Neumann with kernel deflation. Requires N divisible by 8 and
/// 0 < delta < h/2.
GeometryCase geometry_rotated_square(int N, int p, int k, double delta, bool shifted);

/// Unit square with a central circular hole of radius sqrt((1/5)^2+h^2)-delta
/// and four corner cut-outs of radius 1/4-delta, h = 1/20. Several arcs pass
/// delta inside lattice points, cutting only support corners. Dirichlet on
/// the four outer edges. Requires 0 < delta <= h/4.
GeometryCase geometry_plate_hole(int p, int k, double delta);

struct GeometryInfo {
  std::string name;
  std::string params;
  std::string description;
};

/// The six shipped families.
std::vector<GeometryInfo> list_geometries();

/// Dispatch by family name; N == 0 selects the family default.
GeometryCase make_geometry(const std::string& family, int N, int p, int k, double delta,
                           bool shifted = false);

}  // namespace trimspec
