#include "trimspec/trim_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trimspec {

bool TrimConfigReport::has(TrimConfig c) const {
  for (const auto& e : entries)
    if (e.config == c) return true;
  return false;
}

const char* to_string(TrimConfig c) {
  switch (c) {
    case TrimConfig::A: return "A";
    case TrimConfig::B: return "B";
    case TrimConfig::C: return "C";
    case TrimConfig::Other: return "other";
  }
  return "?";
}

TrimConfigEntry classify_trim_configuration(const TensorSplineSpace& space,
                                            const ActiveMesh& mesh,
                                            const ActiveBasisSet& basis,
                                            const TrimRegion& region, int global_index,
                                            double delta) {
  if (space.num_dirs() != 2)
    throw std::invalid_argument("classify_trim_configuration: 2D only");
  const int pos = basis.pos_of_global[global_index];
  if (pos < 0 || !basis.small[pos])
    throw std::invalid_argument("classify_trim_configuration: function is not small");

  TrimConfigEntry entry;
  entry.global_index = global_index;
  entry.support_measure = basis.support_measure[pos];
  const Idx2 mi = space.multi_index(global_index);

  // gather the clipped support geometry from the integration cells
  Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Vec2 hi{-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()};
  double rho_min = 0.0;
  std::vector<Vec2> points;
  const auto rx = space.factor(0).support_elements(mi[0]);
  const auto ry = space.factor(1).support_elements(mi[1]);
  for (int e2 = ry.first; e2 <= ry.second; ++e2)
    for (int e1 = rx.first; e1 <= rx.second; ++e1) {
      const int e = space.element_linear({e1, e2});
      if (mesh.status[e] == ElemStatus::Outside) continue;
      for (const auto& cell : trim_cells(space, mesh, e, region)) {
        if (cell.kind == QuadCell::Kind::Rectangle) {
          points.push_back(cell.lo);
          points.push_back({cell.hi[0], cell.lo[1]});
          points.push_back(cell.hi);
          points.push_back({cell.lo[0], cell.hi[1]});
          rho_min = std::max(rho_min,
                             0.5 * std::min(cell.hi[0] - cell.lo[0], cell.hi[1] - cell.lo[1]));
        } else {
          const auto& t = cell.tri;
          points.insert(points.end(), t.begin(), t.end());
          const double a = std::hypot(t[1][0] - t[0][0], t[1][1] - t[0][1]);
          const double b = std::hypot(t[2][0] - t[1][0], t[2][1] - t[1][1]);
          const double c = std::hypot(t[0][0] - t[2][0], t[0][1] - t[2][1]);
          const double per = a + b + c;
          if (per > 0.0) rho_min = std::max(rho_min, 2.0 * cell.measure() / per);
        }
      }
    }
  for (const auto& p : points) {
    lo[0] = std::min(lo[0], p[0]);
    lo[1] = std::min(lo[1], p[1]);
    hi[0] = std::max(hi[0], p[0]);
    hi[1] = std::max(hi[1], p[1]);
  }
  entry.extent = {hi[0] - lo[0], hi[1] - lo[1]};
  entry.rho_min = rho_min;
  const Vec2 mid{0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])};
  for (const auto& p : points)
    entry.rho_max = std::max(entry.rho_max, std::hypot(p[0] - mid[0], p[1] - mid[1]));

  const double thin_tol = 2.0 * delta + 1e-12;
  const bool thin[2] = {entry.extent[0] <= thin_tol, entry.extent[1] <= thin_tol};

  // a univariate factor vanishes at the cut when the clipped interval is
  // attached to a support endpoint at which the factor is structurally zero
  auto vanishes = [&](int d) {
    auto [t0, t1] = space.factor(d).support_interval(mi[d]);
    constexpr double touch = 1e-9;
    const bool zero_lo = mi[d] > 0;  // open knot vector: only the first/last
    const bool zero_hi = mi[d] < space.dir_dim(d) - 1;  // function is nonzero there
    const double u0 = lo[d], u1 = hi[d];
    return (zero_lo && u0 <= t0 + touch) || (zero_hi && u1 >= t1 - touch);
  };

  if (thin[0] != thin[1]) {
    entry.config = TrimConfig::A;
  } else if (thin[0] && thin[1]) {
    entry.config = (vanishes(0) && vanishes(1)) ? TrimConfig::C : TrimConfig::B;
  } else {
    entry.config = TrimConfig::Other;
  }
  return entry;
}

TrimConfigReport classify_small_functions(const TensorSplineSpace& space,
                                          const ActiveMesh& mesh,
                                          const ActiveBasisSet& basis,
                                          const TrimRegion& region, double delta) {
  TrimConfigReport rep;
  rep.entries.reserve(basis.small_positions.size());
  for (int pos : basis.small_positions)
    rep.entries.push_back(classify_trim_configuration(space, mesh, basis, region,
                                                      basis.active[pos], delta));
  return rep;
}

}  // namespace trimspec
