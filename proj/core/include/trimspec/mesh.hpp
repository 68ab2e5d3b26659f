#pragma once

#include <array>
#include <vector>

#include "trimspec/clip.hpp"
#include "trimspec/region.hpp"
#include "trimspec/tensor_space.hpp"

namespace trimspec {

enum class ElemStatus { Interior, Cut, Outside };

/// Background element grid with per-element cut measures and the good/bad
/// partition. Elements whose clipped measure falls below 1e-14 of the element
/// measure are treated as outside.
struct ActiveMesh {
  int dims = 2;
  double area_tol = 1e-12;
  double gamma = -1.0;  // set by partition_good_bad
  std::vector<ElemStatus> status;
  std::vector<double> cut_measure;
  std::vector<double> full_measure;
  std::vector<char> good;
  std::vector<int> active;  // ascending element indices, not Outside
  double domain_measure = 0.0;
  double min_element_measure = 0.0;
};

ActiveMesh classify_elements(const TensorSplineSpace& space, const TrimRegion& region,
                             double area_tol = 1e-12);

/// Flags elements with |T cap Omega| >= gamma |T| as good.
void partition_good_bad(ActiveMesh& mesh, double gamma);

/// Integration cell covering part of one element: a segment (1D), an
/// axis-aligned rectangle, or a triangle.
struct QuadCell {
  enum class Kind { Segment, Rectangle, Triangle };
  Kind kind = Kind::Rectangle;
  int parent = -1;
  Vec2 lo{}, hi{};               // Segment/Rectangle
  std::array<Vec2, 3> tri{};     // Triangle
  double measure() const;
};

/// Non-overlapping cells covering element cap Omega. Interior elements map to
/// themselves; cut elements are clipped against the region and the clipped
/// polygons fan-triangulated. Outside or degenerate elements yield no cells.
std::vector<QuadCell> trim_cells(const TensorSplineSpace& space, const ActiveMesh& mesh,
                                 int element, const TrimRegion& region);

/// Active basis bookkeeping: indices, active-support measures and the
/// small/large split. Functions whose active support measure is below
/// 1e-14 times the smallest element measure are pruned.
struct ActiveBasisSet {
  std::vector<int> active;          // retained global indices, ascending
  std::vector<int> pos_of_global;   // position in `active`, -1 otherwise
  std::vector<double> support_measure;  // per retained function
  std::vector<char> small;              // per retained function
  std::vector<int> small_positions;     // positions into `active`
  std::vector<int> pruned;              // globals dropped by the cutoff

  int count() const { return static_cast<int>(active.size()); }
  int count_small() const { return static_cast<int>(small_positions.size()); }
};

ActiveBasisSet active_basis(const TensorSplineSpace& space, const ActiveMesh& mesh);

namespace detail {
/// Material pieces of the rectangle [lo,hi] for one region part, as convex
/// polygons (disjoint, exact for the region's polygonal boundary).
std::vector<Polygon> part_pieces(const Region::Part& part, const Vec2& lo, const Vec2& hi);
/// Material measure of the rectangle for a full region, computed by clipping
/// and hole-area subtraction (no piece decomposition).
double rect_measure(const Region& region, const Vec2& lo, const Vec2& hi);
}  // namespace detail

}  // namespace trimspec
