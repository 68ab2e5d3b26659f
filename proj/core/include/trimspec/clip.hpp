#pragma once

#include <vector>

#include "trimspec/region.hpp"

namespace trimspec {

using Polygon = std::vector<Vec2>;

/// Signed area (positive for counter-clockwise orientation).
double polygon_area(const Polygon& poly);

/// Sutherland-Hodgman step: the part of `poly` on the material side of `hp`.
Polygon clip_halfplane(const Polygon& poly, const HalfPlane& hp);

/// Clip against a sequence of half-planes.
Polygon clip_halfplanes(Polygon poly, const std::vector<HalfPlane>& hps);

/// Pieces of the convex polygon `poly` outside the convex set bounded by the
/// given half-planes: piece i lies outside plane i and inside planes 0..i-1,
/// so the pieces are disjoint and their union is poly minus the set.
std::vector<Polygon> subtract_convex(const Polygon& poly,
                                     const std::vector<HalfPlane>& hps);

/// Fan triangulation of a convex polygon: triangles (v0, vi, vi+1).
std::vector<std::array<Vec2, 3>> fan_triangulate(const Polygon& poly);

}  // namespace trimspec
