#include "trimspec/assemble.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace trimspec {

QuadOrder default_quad_order(const TensorSplineSpace& space) {
  int pmax = 0;
  for (int d = 0; d < space.num_dirs(); ++d) pmax = std::max(pmax, space.factor(d).degree());
  return {pmax + 2, 2 * pmax + 3};
}

namespace {

std::vector<QuadPoint> cell_points(const QuadCell& cell, const GaussRule& rect,
                                   const GaussRule& tri) {
  switch (cell.kind) {
    case QuadCell::Kind::Segment:
      return map_interval(rect, cell.lo[0], cell.hi[0]);
    case QuadCell::Kind::Rectangle:
      return map_rectangle(rect, rect, cell.lo, cell.hi);
    case QuadCell::Kind::Triangle:
      return map_triangle(tri, cell.tri[0], cell.tri[1], cell.tri[2]);
  }
  return {};
}

struct LocalIntegrals {
  Eigen::MatrixXd K, M;
  Eigen::VectorXd l1;
  Idx2 first{};
  bool any = false;
};

LocalIntegrals integrate_element(const TensorSplineSpace& space, const ActiveMesh& mesh,
                                 const TrimRegion& region, int e,
                                 const GaussRule& rect_rule, const GaussRule& tri_rule,
                                 int nloc) {
  LocalIntegrals loc;
  loc.K = Eigen::MatrixXd::Zero(nloc, nloc);
  loc.M = Eigen::MatrixXd::Zero(nloc, nloc);
  loc.l1 = Eigen::VectorXd::Zero(nloc);
  for (const auto& cell : trim_cells(space, mesh, e, region)) {
    for (const auto& qp : cell_points(cell, rect_rule, tri_rule)) {
      const TensorEval ev = space.eval(qp.x, 1);
      if (!loc.any) {
        loc.first = ev.first;
        loc.any = true;
      }
      for (int a = 0; a < nloc; ++a) {
        const double va = ev.values[a];
        const auto& ga = ev.grads[a];
        loc.l1(a) += qp.w * va;
        for (int b = 0; b <= a; ++b) {
          loc.K(a, b) += qp.w * (ga[0] * ev.grads[b][0] + ga[1] * ev.grads[b][1]);
          loc.M(a, b) += qp.w * va * ev.values[b];
        }
      }
    }
  }
  return loc;
}

}  // namespace

SystemMatrices assemble(const TensorSplineSpace& space, const ActiveMesh& mesh,
                        const ActiveBasisSet& basis, const TrimRegion& region,
                        const QuadOrder& order) {
  const int d = space.num_dirs();
  int pmax = 0;
  for (int k = 0; k < d; ++k) pmax = std::max(pmax, space.factor(k).degree());
  if (order.rect < pmax + 1)
    throw std::invalid_argument("assemble: rectangle quadrature order too low");
  if (order.triangle < 2 * pmax + 2)
    throw std::invalid_argument("assemble: triangle quadrature order too low");

  const GaussRule rect_rule = gauss_rule(order.rect);
  const GaussRule tri_rule = gauss_rule(order.triangle);

  const int n = basis.count();
  SystemMatrices sys;
  sys.dims = d;
  sys.active = basis.active;
  sys.K = Eigen::MatrixXd::Zero(n, n);
  sys.M = Eigen::MatrixXd::Zero(n, n);
  sys.l1_direct = Eigen::VectorXd::Zero(n);

  int nloc = 1;
  for (int k = 0; k < d; ++k) nloc *= space.factor(k).degree() + 1;
  std::vector<int> pos(nloc);
  const int n1 = space.factor(0).degree() + 1;

  for (int e : mesh.active) {
    const LocalIntegrals loc =
        integrate_element(space, mesh, region, e, rect_rule, tri_rule, nloc);
    if (!loc.any) throw std::runtime_error("assemble: active element without cells");
    for (int a = 0; a < nloc; ++a) {
      Idx2 mi = {loc.first[0] + a % n1, d == 1 ? 0 : loc.first[1] + a / n1};
      pos[a] = basis.pos_of_global[space.linear_index(mi)];
    }
    for (int a = 0; a < nloc; ++a) {
      if (pos[a] < 0) continue;
      sys.l1_direct(pos[a]) += loc.l1(a);
      for (int b = 0; b <= a; ++b) {
        if (pos[b] < 0) continue;
        sys.K(pos[a], pos[b]) += loc.K(a, b);
        sys.M(pos[a], pos[b]) += loc.M(a, b);
        if (pos[a] != pos[b]) {
          sys.K(pos[b], pos[a]) += loc.K(a, b);
          sys.M(pos[b], pos[a]) += loc.M(a, b);
        }
      }
    }
  }
  return sys;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> element_integrals(
    const TensorSplineSpace& space, const ActiveMesh& mesh, const TrimRegion& region,
    int element, const QuadOrder& order) {
  int nloc = 1;
  for (int k = 0; k < space.num_dirs(); ++k) nloc *= space.factor(k).degree() + 1;
  const LocalIntegrals loc = integrate_element(space, mesh, region, element,
                                               gauss_rule(order.rect),
                                               gauss_rule(order.triangle), nloc);
  Eigen::MatrixXd K = loc.K.selfadjointView<Eigen::Lower>();
  Eigen::MatrixXd M = loc.M.selfadjointView<Eigen::Lower>();
  return {K, M};
}

Eigen::VectorXd lump_rowsum(const SystemMatrices& sys) {
  if (sys.reduced)
    throw std::invalid_argument("lump_rowsum: lump before Dirichlet reduction");
  Eigen::VectorXd d = sys.M.rowwise().sum();
  for (int i = 0; i < d.size(); ++i) {
    if (!(d(i) > 0.0))
      throw std::runtime_error(
          "lump_rowsum: nonpositive row sum (vanishing active support at index " +
          std::to_string(sys.active[i]) + ")");
    const double ref = sys.l1_direct(i);
    if (std::abs(d(i) - ref) > 1e-12 * std::max(std::abs(ref), std::abs(d(i))))
      throw std::runtime_error("lump_rowsum: row sum disagrees with the L1 norm");
  }
  return d;
}

namespace {

bool side_is_fitted(int side, const TensorSplineSpace& space, const ActiveMesh& mesh,
                    const TrimRegion& region) {
  if (region.dims == 1) {
    const auto& f = space.factor(0);
    const double h = (f.knot_vector().right() - f.knot_vector().left()) / f.num_elements();
    const double eps = 1e-9 * h;
    return side == 0 ? region.contains1d(f.knot_vector().left() + eps)
                     : region.contains1d(f.knot_vector().right() - eps);
  }
  const int dir = side / 2;        // 0: x sides, 1: y sides
  const bool at_min = side % 2 == 0;
  const auto& f = space.factor(dir);
  const int edge_elem = at_min ? 0 : f.num_elements() - 1;
  const double coord = at_min ? f.knot_vector().left() : f.knot_vector().right();
  const auto& other = space.factor(1 - dir);
  for (int j = 0; j < other.num_elements(); ++j) {
    const Idx2 me = dir == 0 ? Idx2{edge_elem, j} : Idx2{j, edge_elem};
    const int e = space.element_linear(me);
    if (mesh.status[e] == ElemStatus::Outside) continue;
    auto [a, b] = other.element(j);
    const double inward = 1e-9 * (b - a);
    Vec2 x{};
    x[dir] = at_min ? coord + inward : coord - inward;
    x[1 - dir] = 0.5 * (a + b);
    if (region.region2d.contains(x)) return true;
  }
  return false;
}

}  // namespace

SystemMatrices apply_dirichlet_strong(const SystemMatrices& sys, const BoundarySpec& bc,
                                      const TensorSplineSpace& space,
                                      const ActiveMesh& mesh, const TrimRegion& region,
                                      std::vector<int>* kept_out) {
  const int d = space.num_dirs();
  const int nsides = d == 1 ? 2 : 4;
  // side order in BoundarySpec: left, right, bottom, top
  auto side_to_axis = [](int s) { return s / 2; };
  for (int s = 0; s < nsides; ++s)
    if (bc.side[s] == BC::Dirichlet && !side_is_fitted(s, space, mesh, region))
      throw std::invalid_argument("apply_dirichlet_strong: Dirichlet on a trimmed side");

  std::vector<int> kept;
  kept.reserve(sys.active.size());
  for (std::size_t r = 0; r < sys.active.size(); ++r) {
    const Idx2 mi = space.multi_index(sys.active[r]);
    bool remove = false;
    for (int s = 0; s < nsides && !remove; ++s) {
      if (bc.side[s] != BC::Dirichlet) continue;
      const int axis = side_to_axis(s);
      const int idx = mi[axis];
      const int last = space.dir_dim(axis) - 1;
      remove = (s % 2 == 0) ? idx == 0 : idx == last;
    }
    if (!remove) kept.push_back(static_cast<int>(r));
  }

  SystemMatrices out;
  out.dims = sys.dims;
  out.reduced = true;
  out.deflate = bc.pure_neumann();
  const int m = static_cast<int>(kept.size());
  out.K.resize(m, m);
  out.M.resize(m, m);
  out.l1_direct.resize(m);
  out.active.resize(m);
  for (int i = 0; i < m; ++i) {
    out.active[i] = sys.active[kept[i]];
    out.l1_direct(i) = sys.l1_direct(kept[i]);
    for (int j = 0; j < m; ++j) {
      out.K(i, j) = sys.K(kept[i], kept[j]);
      out.M(i, j) = sys.M(kept[i], kept[j]);
    }
  }
  if (sys.mhat.size() > 0) {
    out.mhat.resize(m);
    for (int i = 0; i < m; ++i) out.mhat(i) = sys.mhat(kept[i]);
  }
  if (kept_out) *kept_out = std::move(kept);
  return out;
}

Eigen::VectorXd diag_ratios(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat) {
  return K.diagonal().cwiseQuotient(mhat);
}

void export_coo(std::ostream& os, const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  long nnz = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (A(i, j) != 0.0) ++nnz;
  os << n << " " << nnz << "\n";
  char buf[64];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (A(i, j) != 0.0) {
        std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i + 1, j + 1, A(i, j));
        os << buf;
      }
}

}  // namespace trimspec
