#include "trimspec/clip.hpp"

namespace trimspec {

double polygon_area(const Polygon& poly) {
  const int n = static_cast<int>(poly.size());
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * twice;
}

Polygon clip_halfplane(const Polygon& poly, const HalfPlane& hp) {
  const int n = static_cast<int>(poly.size());
  if (n == 0) return {};
  Polygon out;
  out.reserve(poly.size() + 2);
  double dprev = hp.signed_dist(poly[n - 1]);
  for (int i = 0; i < n; ++i) {
    const double d = hp.signed_dist(poly[i]);
    const Vec2& prev = poly[(i + n - 1) % n];
    if (d >= 0.0) {
      if (dprev < 0.0) {
        const double t = dprev / (dprev - d);
        out.push_back({prev[0] + t * (poly[i][0] - prev[0]),
                       prev[1] + t * (poly[i][1] - prev[1])});
      }
      out.push_back(poly[i]);
    } else if (dprev >= 0.0) {
      const double t = dprev / (dprev - d);
      out.push_back({prev[0] + t * (poly[i][0] - prev[0]),
                     prev[1] + t * (poly[i][1] - prev[1])});
    }
    dprev = d;
  }
  if (out.size() < 3) out.clear();
  return out;
}

Polygon clip_halfplanes(Polygon poly, const std::vector<HalfPlane>& hps) {
  for (const auto& hp : hps) {
    poly = clip_halfplane(poly, hp);
    if (poly.empty()) break;
  }
  return poly;
}

std::vector<Polygon> subtract_convex(const Polygon& poly,
                                     const std::vector<HalfPlane>& hps) {
  std::vector<Polygon> pieces;
  Polygon remainder = poly;  // intersection with planes seen so far
  for (const auto& hp : hps) {
    if (remainder.empty()) break;
    HalfPlane outside{hp.point, {-hp.normal[0], -hp.normal[1]}};
    Polygon piece = clip_halfplane(remainder, outside);
    if (!piece.empty()) pieces.push_back(std::move(piece));
    remainder = clip_halfplane(remainder, hp);
  }
  return pieces;
}

std::vector<std::array<Vec2, 3>> fan_triangulate(const Polygon& poly) {
  std::vector<std::array<Vec2, 3>> tris;
  const int n = static_cast<int>(poly.size());
  for (int i = 1; i + 1 < n; ++i)
    tris.push_back({poly[0], poly[i], poly[i + 1]});
  return tris;
}

}  // namespace trimspec
