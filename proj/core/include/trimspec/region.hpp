#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trimspec/tensor_space.hpp"

namespace trimspec {

/// Material side: dot(x - point, normal) >= 0.
struct HalfPlane {
  Vec2 point{};
  Vec2 normal{};
  double signed_dist(const Vec2& x) const {
    return (x[0] - point[0]) * normal[0] + (x[1] - point[1]) * normal[1];
  }
};

/// Inscribed polygonal approximation of a circle with uniformly spaced
/// vertices; the number of segments is chosen so the sagitta stays below the
/// requested tolerance. Convex by construction.
class DiscPoly {
 public:
  DiscPoly() = default;
  DiscPoly(Vec2 center, double radius, double sagitta_tol);

  const Vec2& center() const { return center_; }
  double radius() const { return radius_; }
  int num_edges() const { return nseg_; }
  Vec2 vertex(int i) const;
  /// Inside half-plane of edge i (vertex i to vertex i+1).
  HalfPlane edge(int i) const;
  bool contains(const Vec2& x) const;

  enum class RectRelation { Inside, Outside, Boundary };
  /// Conservative relation of the rectangle [lo,hi] to the polygon.
  RectRelation relation(const Vec2& lo, const Vec2& hi) const;
  /// Contiguous wrap-around edge index range {first, count} covering every
  /// edge whose inside half-plane can be binding on points of [lo,hi].
  std::pair<int, int> edge_range(const Vec2& lo, const Vec2& hi) const;

 private:
  Vec2 center_{};
  double radius_ = 0.0;
  int nseg_ = 0;
  double dtheta_ = 0.0;
  double apothem_ = 0.0;  // radius * cos(pi/nseg)
};

/// Trimmed physical domain in 2D, kept in a normal form: a union of pairwise
/// disjoint parts, each an intersection of half-planes and discs minus a set
/// of pairwise disjoint convex holes.
struct Region {
  struct Part {
    std::vector<HalfPlane> planes;
    std::vector<DiscPoly> discs;   // material inside each
    std::vector<DiscPoly> holes;   // material outside each
  };
  std::vector<Part> parts;

  bool contains(const Vec2& x) const;

  static Region everything();
  static Region box(const Vec2& lo, const Vec2& hi);
  static Region halfplanes(std::vector<HalfPlane> planes);
  /// Convex polygon given counter-clockwise.
  static Region convex_polygon(const std::vector<Vec2>& verts);
  static Region disc(const Vec2& c, double r, double sagitta_tol);
  /// Intersection of regions that are single parts (no unions involved).
  static Region intersect(const std::vector<Region>& rs);
  /// Union of pairwise disjoint regions.
  static Region unite(const std::vector<Region>& rs);
  /// This region minus a disc (caller guarantees the hole does not meet any
  /// existing hole).
  Region with_hole(const Vec2& c, double r, double sagitta_tol) const;
};

/// Physical domain for either dimension. In 1D the material set is the
/// interval (lo, hi).
struct TrimRegion {
  int dims = 2;
  double lo1d = 0.0, hi1d = 0.0;
  Region region2d;

  static TrimRegion interval(double lo, double hi);
  static TrimRegion planar(Region r);
  bool contains1d(double x) const { return x > lo1d && x < hi1d; }
};

}  // namespace trimspec
