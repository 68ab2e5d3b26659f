#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "trimspec/mesh.hpp"
#include "trimspec/quadrature.hpp"
#include "trimspec/region.hpp"
#include "trimspec/tensor_space.hpp"

namespace trimspec {

enum class BC { Neumann, Dirichlet };

/// Boundary conditions per side of the fictitious box. Sides are indexed
/// left, right, bottom, top; 1D uses left/right only. Dirichlet sides must be
/// fitted (untrimmed) sides of the box.
struct BoundarySpec {
  std::array<BC, 4> side{BC::Neumann, BC::Neumann, BC::Neumann, BC::Neumann};
  bool pure_neumann() const {
    for (auto s : side)
      if (s == BC::Dirichlet) return false;
    return true;
  }
};

/// Stiffness K, consistent mass M and row-sum lumped mass over the retained
/// active basis, stored dense (desk-scale problems). `active` maps matrix row
/// to global basis index. Assembly order is deterministic: elements
/// ascending, cells in decomposition order.
struct SystemMatrices {
  Eigen::MatrixXd K;
  Eigen::MatrixXd M;
  Eigen::VectorXd mhat;       // row sums of M
  Eigen::VectorXd l1_direct;  // directly quadratured L1 norms
  std::vector<int> active;    // row -> global basis index
  bool reduced = false;
  bool deflate = false;  // pure-Neumann kernel deflation requested
  int dims = 2;

  int size() const { return static_cast<int>(K.rows()); }
};

struct QuadOrder {
  int rect = 0;      // points per direction on rectangles/segments
  int triangle = 0;  // points per Duffy direction on triangles
};

/// Default orders: p+2 per direction on rectangles, 2p+3 on triangles.
QuadOrder default_quad_order(const TensorSplineSpace& space);

/// Assemble K and M over the retained active basis with exact Gauss
/// quadrature on the trim cells.
SystemMatrices assemble(const TensorSplineSpace& space, const ActiveMesh& mesh,
                        const ActiveBasisSet& basis, const TrimRegion& region,
                        const QuadOrder& order);

/// Row-sum lumped diagonal d_i = sum_j M_ij. Checks the row sums against the
/// directly quadratured L1 norms (1e-12 relative) and rejects nonpositive
/// entries.
Eigen::VectorXd lump_rowsum(const SystemMatrices& sys);

/// Removes the rows/columns of functions with nonzero trace on the Dirichlet
/// sides. Returns the reduced system; `kept` maps reduced row to the row of
/// the unreduced system.
SystemMatrices apply_dirichlet_strong(const SystemMatrices& sys, const BoundarySpec& bc,
                                      const TensorSplineSpace& space,
                                      const ActiveMesh& mesh, const TrimRegion& region,
                                      std::vector<int>* kept = nullptr);

/// Per-index Rayleigh ratios K_ii / mhat_i.
Eigen::VectorXd diag_ratios(const Eigen::MatrixXd& K, const Eigen::VectorXd& mhat);

/// Local stiffness/mass integrals of one element over its trim cells, for
/// quadrature refinement checks. Rows/columns follow the element-local
/// function order.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> element_integrals(
    const TensorSplineSpace& space, const ActiveMesh& mesh, const TrimRegion& region,
    int element, const QuadOrder& order);

/// Plain-text symmetric coordinate export: "n nnz" header, then one
/// "i j value" line per lower-triangle nonzero (1-based, 17 significant
/// digits).
void export_coo(std::ostream& os, const Eigen::MatrixXd& A);

}  // namespace trimspec
