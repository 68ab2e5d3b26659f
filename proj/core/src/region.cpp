#include "trimspec/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trimspec {

DiscPoly::DiscPoly(Vec2 center, double radius, double sagitta_tol)
    : center_(center), radius_(radius) {
  if (radius <= 0.0) throw std::invalid_argument("DiscPoly: radius must be > 0");
  if (sagitta_tol <= 0.0) throw std::invalid_argument("DiscPoly: sagitta tolerance must be > 0");
  const double s = std::min(sagitta_tol, 0.5 * radius);
  nseg_ = std::max(8, static_cast<int>(std::ceil(M_PI / std::acos(1.0 - s / radius))));
  dtheta_ = 2.0 * M_PI / nseg_;
  apothem_ = radius * std::cos(M_PI / nseg_);
}

Vec2 DiscPoly::vertex(int i) const {
  const int k = ((i % nseg_) + nseg_) % nseg_;
  const double t = k * dtheta_;
  return {center_[0] + radius_ * std::cos(t), center_[1] + radius_ * std::sin(t)};
}

HalfPlane DiscPoly::edge(int i) const {
  const Vec2 a = vertex(i), b = vertex(i + 1);
  // inward normal of the CCW edge a->b
  return {a, {-(b[1] - a[1]), b[0] - a[0]}};
}

bool DiscPoly::contains(const Vec2& x) const {
  const double dx = x[0] - center_[0], dy = x[1] - center_[1];
  const double d2 = dx * dx + dy * dy;
  if (d2 <= apothem_ * apothem_) return true;
  if (d2 >= radius_ * radius_) return false;
  // binding edge is the one of the angular sector containing x
  double theta = std::atan2(dy, dx);
  if (theta < 0.0) theta += 2.0 * M_PI;
  const int k = std::min(nseg_ - 1, static_cast<int>(theta / dtheta_));
  return edge(k).signed_dist(x) >= 0.0;
}

DiscPoly::RectRelation DiscPoly::relation(const Vec2& lo, const Vec2& hi) const {
  const double cx = std::clamp(center_[0], lo[0], hi[0]);
  const double cy = std::clamp(center_[1], lo[1], hi[1]);
  const double dmin = std::hypot(cx - center_[0], cy - center_[1]);
  double dmax = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double px = (c & 1) ? hi[0] : lo[0];
    const double py = (c & 2) ? hi[1] : lo[1];
    dmax = std::max(dmax, std::hypot(px - center_[0], py - center_[1]));
  }
  if (dmax <= apothem_) return RectRelation::Inside;
  if (dmin >= radius_) return RectRelation::Outside;
  return RectRelation::Boundary;
}

std::pair<int, int> DiscPoly::edge_range(const Vec2& lo, const Vec2& hi) const {
  if (center_[0] >= lo[0] && center_[0] <= hi[0] && center_[1] >= lo[1] &&
      center_[1] <= hi[1])
    return {0, nseg_};
  const double mx = 0.5 * (lo[0] + hi[0]) - center_[0];
  const double my = 0.5 * (lo[1] + hi[1]) - center_[1];
  const double ref = std::atan2(my, mx);
  double amin = 0.0, amax = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double px = ((c & 1) ? hi[0] : lo[0]) - center_[0];
    const double py = ((c & 2) ? hi[1] : lo[1]) - center_[1];
    double rel = std::atan2(py, px) - ref;
    if (rel > M_PI) rel -= 2.0 * M_PI;
    if (rel < -M_PI) rel += 2.0 * M_PI;
    amin = std::min(amin, rel);
    amax = std::max(amax, rel);
  }
  const double lo_angle = ref + amin - dtheta_;
  const double span = (amax - amin) + 2.0 * dtheta_;
  if (span >= 2.0 * M_PI) return {0, nseg_};
  int first = static_cast<int>(std::floor(lo_angle / dtheta_));
  int count = std::min(static_cast<int>(std::ceil(span / dtheta_)) + 1, nseg_);
  return {((first % nseg_) + nseg_) % nseg_, count};
}

bool Region::contains(const Vec2& x) const {
  for (const auto& part : parts) {
    bool in = true;
    for (const auto& pl : part.planes)
      if (pl.signed_dist(x) < 0.0) {
        in = false;
        break;
      }
    if (in)
      for (const auto& d : part.discs)
        if (!d.contains(x)) {
          in = false;
          break;
        }
    if (in)
      for (const auto& h : part.holes)
        if (h.contains(x)) {
          in = false;
          break;
        }
    if (in) return true;
  }
  return false;
}

Region Region::everything() { return Region{{Part{}}}; }

Region Region::box(const Vec2& lo, const Vec2& hi) {
  Part p;
  p.planes = {{{lo[0], lo[1]}, {1.0, 0.0}},
              {{hi[0], hi[1]}, {-1.0, 0.0}},
              {{lo[0], lo[1]}, {0.0, 1.0}},
              {{hi[0], hi[1]}, {0.0, -1.0}}};
  return Region{{std::move(p)}};
}

Region Region::halfplanes(std::vector<HalfPlane> planes) {
  Part p;
  p.planes = std::move(planes);
  return Region{{std::move(p)}};
}

Region Region::convex_polygon(const std::vector<Vec2>& verts) {
  if (verts.size() < 3) throw std::invalid_argument("convex_polygon: need >= 3 vertices");
  Part p;
  const int n = static_cast<int>(verts.size());
  for (int i = 0; i < n; ++i) {
    const Vec2& a = verts[i];
    const Vec2& b = verts[(i + 1) % n];
    p.planes.push_back({a, {-(b[1] - a[1]), b[0] - a[0]}});
  }
  return Region{{std::move(p)}};
}

Region Region::disc(const Vec2& c, double r, double sagitta_tol) {
  Part p;
  p.discs.emplace_back(c, r, sagitta_tol);
  return Region{{std::move(p)}};
}

Region Region::intersect(const std::vector<Region>& rs) {
  Part merged;
  for (const auto& r : rs) {
    if (r.parts.size() != 1)
      throw std::invalid_argument("Region::intersect: operands must be single parts");
    const Part& p = r.parts.front();
    merged.planes.insert(merged.planes.end(), p.planes.begin(), p.planes.end());
    merged.discs.insert(merged.discs.end(), p.discs.begin(), p.discs.end());
    merged.holes.insert(merged.holes.end(), p.holes.begin(), p.holes.end());
  }
  return Region{{std::move(merged)}};
}

Region Region::unite(const std::vector<Region>& rs) {
  Region out;
  for (const auto& r : rs)
    out.parts.insert(out.parts.end(), r.parts.begin(), r.parts.end());
  return out;
}

Region Region::with_hole(const Vec2& c, double r, double sagitta_tol) const {
  if (parts.size() != 1)
    throw std::invalid_argument("Region::with_hole: region must be a single part");
  Region out = *this;
  out.parts.front().holes.emplace_back(c, r, sagitta_tol);
  return out;
}

TrimRegion TrimRegion::interval(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("TrimRegion::interval: empty interval");
  TrimRegion t;
  t.dims = 1;
  t.lo1d = lo;
  t.hi1d = hi;
  return t;
}

TrimRegion TrimRegion::planar(Region r) {
  TrimRegion t;
  t.dims = 2;
  t.region2d = std::move(r);
  return t;
}

}  // namespace trimspec
