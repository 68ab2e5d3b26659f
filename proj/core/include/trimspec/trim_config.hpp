#pragma once

#include <vector>

#include "trimspec/mesh.hpp"
#include "trimspec/region.hpp"
#include "trimspec/tensor_space.hpp"

namespace trimspec {

/// How a trim curve crosses the support of a small basis function: along one
/// direction only (A); in both directions missing the support corner (B); or
/// wrapping a support corner, both univariate factors vanishing at the cut
/// (C). Diagnostic only, never used by assembly.
enum class TrimConfig { A, B, C, Other };

struct TrimConfigEntry {
  int global_index = -1;
  TrimConfig config = TrimConfig::Other;
  double rho_min = 0.0;  // inscribed-ball radius estimate of the active support
  double rho_max = 0.0;  // circumscribed-ball radius estimate
  Vec2 extent{};         // active-support extent per direction
  double support_measure = 0.0;
};

struct TrimConfigReport {
  std::vector<TrimConfigEntry> entries;  // one per small basis function
  bool has(TrimConfig c) const;
};

/// Classify one small basis function (2D only). A direction counts as
/// delta-thin when its clipped extent is at most 2*delta + 1e-12.
TrimConfigEntry classify_trim_configuration(const TensorSplineSpace& space,
                                            const ActiveMesh& mesh,
                                            const ActiveBasisSet& basis,
                                            const TrimRegion& region, int global_index,
                                            double delta);

TrimConfigReport classify_small_functions(const TensorSplineSpace& space,
                                          const ActiveMesh& mesh,
                                          const ActiveBasisSet& basis,
                                          const TrimRegion& region, double delta);

const char* to_string(TrimConfig c);

}  // namespace trimspec
