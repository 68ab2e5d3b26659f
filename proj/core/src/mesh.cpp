#include "trimspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trimspec {

namespace {

constexpr double kDropFraction = 1e-14;  // element dropped below this measure share

std::vector<HalfPlane> local_edges(const DiscPoly& d, const Vec2& lo, const Vec2& hi) {
  auto [first, count] = d.edge_range(lo, hi);
  std::vector<HalfPlane> edges;
  edges.reserve(count);
  for (int k = 0; k < count; ++k) edges.push_back(d.edge(first + k));
  return edges;
}

Polygon rect_polygon(const Vec2& lo, const Vec2& hi) {
  return {{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
}

}  // namespace

namespace detail {

std::vector<Polygon> part_pieces(const Region::Part& part, const Vec2& lo, const Vec2& hi) {
  Polygon base = clip_halfplanes(rect_polygon(lo, hi), part.planes);
  for (const auto& d : part.discs) {
    if (base.empty()) return {};
    switch (d.relation(lo, hi)) {
      case DiscPoly::RectRelation::Outside:
        return {};
      case DiscPoly::RectRelation::Inside:
        break;
      case DiscPoly::RectRelation::Boundary:
        base = clip_halfplanes(std::move(base), local_edges(d, lo, hi));
        break;
    }
  }
  if (base.empty()) return {};

  std::vector<Polygon> pieces{std::move(base)};
  for (const auto& h : part.holes) {
    switch (h.relation(lo, hi)) {
      case DiscPoly::RectRelation::Outside:
        break;
      case DiscPoly::RectRelation::Inside:
        return {};  // the whole rectangle sits inside the hole
      case DiscPoly::RectRelation::Boundary: {
        const auto edges = local_edges(h, lo, hi);
        std::vector<Polygon> next;
        for (const auto& piece : pieces) {
          auto outs = subtract_convex(piece, edges);
          next.insert(next.end(), std::make_move_iterator(outs.begin()),
                      std::make_move_iterator(outs.end()));
        }
        pieces = std::move(next);
        break;
      }
    }
    if (pieces.empty()) break;
  }
  return pieces;
}

double rect_measure(const Region& region, const Vec2& lo, const Vec2& hi) {
  double total = 0.0;
  for (const auto& part : region.parts) {
    Polygon base = clip_halfplanes(rect_polygon(lo, hi), part.planes);
    bool empty = false;
    for (const auto& d : part.discs) {
      if (base.empty()) break;
      switch (d.relation(lo, hi)) {
        case DiscPoly::RectRelation::Outside:
          empty = true;
          break;
        case DiscPoly::RectRelation::Inside:
          break;
        case DiscPoly::RectRelation::Boundary:
          base = clip_halfplanes(std::move(base), local_edges(d, lo, hi));
          break;
      }
      if (empty) break;
    }
    if (empty || base.empty()) continue;
    double area = polygon_area(base);
    for (const auto& h : part.holes) {
      switch (h.relation(lo, hi)) {
        case DiscPoly::RectRelation::Outside:
          break;
        case DiscPoly::RectRelation::Inside:
          area = 0.0;
          break;
        case DiscPoly::RectRelation::Boundary:
          area -= polygon_area(clip_halfplanes(base, local_edges(h, lo, hi)));
          break;
      }
      if (area <= 0.0) break;
    }
    total += std::max(area, 0.0);
  }
  return total;
}

}  // namespace detail

ActiveMesh classify_elements(const TensorSplineSpace& space, const TrimRegion& region,
                             double area_tol) {
  if (area_tol <= 0.0) throw std::invalid_argument("classify_elements: area_tol must be > 0");
  if (space.num_dirs() != region.dims)
    throw std::invalid_argument("classify_elements: dimension mismatch");

  ActiveMesh mesh;
  mesh.dims = region.dims;
  mesh.area_tol = area_tol;
  const int ne = space.num_elements();
  mesh.status.assign(ne, ElemStatus::Outside);
  mesh.cut_measure.assign(ne, 0.0);
  mesh.full_measure.assign(ne, 0.0);
  mesh.good.assign(ne, 0);
  mesh.min_element_measure = std::numeric_limits<double>::max();

  for (int e = 0; e < ne; ++e) {
    auto [lo, hi] = space.element_bounds(e);
    const double full = space.element_measure(e);
    mesh.full_measure[e] = full;
    mesh.min_element_measure = std::min(mesh.min_element_measure, full);
    double m = 0.0;
    if (region.dims == 1) {
      m = std::max(0.0, std::min(hi[0], region.hi1d) - std::max(lo[0], region.lo1d));
    } else {
      m = detail::rect_measure(region.region2d, lo, hi);
    }
    if (m <= kDropFraction * full) {
      mesh.status[e] = ElemStatus::Outside;
      mesh.cut_measure[e] = 0.0;
    } else if (m >= full * (1.0 - area_tol)) {
      mesh.status[e] = ElemStatus::Interior;
      mesh.cut_measure[e] = full;
      mesh.active.push_back(e);
    } else {
      mesh.status[e] = ElemStatus::Cut;
      mesh.cut_measure[e] = m;
      mesh.active.push_back(e);
    }
    mesh.domain_measure += mesh.cut_measure[e];
  }
  if (mesh.active.empty())
    throw std::invalid_argument("classify_elements: physical domain is empty");
  return mesh;
}

void partition_good_bad(ActiveMesh& mesh, double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("partition_good_bad: gamma must be in [0,1]");
  mesh.gamma = gamma;
  for (std::size_t e = 0; e < mesh.status.size(); ++e)
    mesh.good[e] = mesh.status[e] != ElemStatus::Outside &&
                   mesh.cut_measure[e] >= gamma * mesh.full_measure[e];
}

double QuadCell::measure() const {
  switch (kind) {
    case Kind::Segment:
      return hi[0] - lo[0];
    case Kind::Rectangle:
      return (hi[0] - lo[0]) * (hi[1] - lo[1]);
    case Kind::Triangle:
      return 0.5 * std::abs((tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) -
                            (tri[2][0] - tri[0][0]) * (tri[1][1] - tri[0][1]));
  }
  return 0.0;
}

std::vector<QuadCell> trim_cells(const TensorSplineSpace& space, const ActiveMesh& mesh,
                                 int element, const TrimRegion& region) {
  std::vector<QuadCell> cells;
  if (element < 0 || element >= static_cast<int>(mesh.status.size()))
    throw std::out_of_range("trim_cells: element index");
  if (mesh.status[element] == ElemStatus::Outside) return cells;

  auto [lo, hi] = space.element_bounds(element);
  if (mesh.dims == 1) {
    QuadCell c;
    c.kind = QuadCell::Kind::Segment;
    c.parent = element;
    c.lo = {std::max(lo[0], region.lo1d), 0.0};
    c.hi = {std::min(hi[0], region.hi1d), 0.0};
    if (c.hi[0] > c.lo[0]) cells.push_back(c);
    return cells;
  }

  const double full = space.element_measure(element);
  if (mesh.status[element] == ElemStatus::Interior) {
    QuadCell c;
    c.kind = QuadCell::Kind::Rectangle;
    c.parent = element;
    c.lo = lo;
    c.hi = hi;
    cells.push_back(c);
    return cells;
  }

  double covered = 0.0;
  for (const auto& part : region.region2d.parts) {
    for (const auto& piece : detail::part_pieces(part, lo, hi)) {
      const double a = polygon_area(piece);
      if (a <= 1e-15 * full) continue;
      covered += a;
      for (const auto& t : fan_triangulate(piece)) {
        QuadCell c;
        c.kind = QuadCell::Kind::Triangle;
        c.parent = element;
        c.tri = t;
        if (c.measure() > 0.0) cells.push_back(c);
      }
    }
  }
  // decomposition must agree with the clipped measure
  if (std::abs(covered - mesh.cut_measure[element]) > 1e-10 * full)
    throw std::runtime_error("trim_cells: cell decomposition does not cover the cut");
  return cells;
}

ActiveBasisSet active_basis(const TensorSplineSpace& space, const ActiveMesh& mesh) {
  ActiveBasisSet set;
  const int n = space.dim();
  set.pos_of_global.assign(n, -1);
  const double prune_tol = kDropFraction * mesh.min_element_measure;
  const int d = space.num_dirs();

  for (int i = 0; i < n; ++i) {
    const Idx2 mi = space.multi_index(i);
    std::array<std::pair<int, int>, 2> ranges{};
    for (int k = 0; k < d; ++k) ranges[k] = space.factor(k).support_elements(mi[k]);
    if (d == 1) ranges[1] = {0, 0};

    double s = 0.0;
    bool any_active = false, any_good = false;
    for (int e2 = ranges[1].first; e2 <= ranges[1].second; ++e2)
      for (int e1 = ranges[0].first; e1 <= ranges[0].second; ++e1) {
        const int e = space.element_linear(d == 1 ? Idx2{e1, 0} : Idx2{e1, e2});
        if (mesh.status[e] == ElemStatus::Outside) continue;
        any_active = true;
        any_good = any_good || mesh.good[e];
        s += mesh.cut_measure[e];
      }
    if (!any_active) continue;
    if (s < prune_tol) {
      set.pruned.push_back(i);
      continue;
    }
    set.pos_of_global[i] = static_cast<int>(set.active.size());
    set.active.push_back(i);
    set.support_measure.push_back(s);
    set.small.push_back(any_good ? 0 : 1);
    if (!any_good) set.small_positions.push_back(static_cast<int>(set.active.size()) - 1);
  }
  return set;
}

}  // namespace trimspec
