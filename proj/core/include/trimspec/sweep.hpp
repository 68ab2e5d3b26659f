#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trimspec/bounds.hpp"
#include "trimspec/geometries.hpp"
#include "trimspec/trim_config.hpp"

namespace trimspec {

struct SweepSpec {
  std::string family = "1d_trim";
  int N = 0;  // 0 -> family default
  int p = 2;
  int k = -1;  // -1 -> p-1 (maximal smoothness)
  bool shifted = false;
  std::vector<double> deltas;  // descending; empty -> family default
  double gamma = 0.5;
  int q_rect = 0, q_tri = 0;  // 0 -> defaults from the degree
  int jobs = 0;               // 0 -> hardware concurrency
  bool want_vectors = false;
};

/// Default trimming parameters: 1e-3 .. 1e-8 in 1D, seven logarithmically
/// spaced values between 1e-2 and 1e-5 in 2D.
std::vector<double> default_deltas(const std::string& family);

struct SweepRow {
  double delta = 0.0;
  double lambda1_lumped = 0.0;
  double lambdan_lumped = 0.0;
  double lambdan_consistent = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double infnorm_bound = 0.0;
  double improved_bound = 0.0;
  bool lambda1_below_floor = false;
  bool consistent_ok = true;
  // extras carried for reports and acceptance checks (not in the CSV schema)
  int n = 0;
  int c_pd = 0;
  int n_small = 0;
  int argmin_global = -1, argmax_global = -1;
  std::string argmin_config = "large", argmax_config = "large";
  double dt_lumped = 0.0, dt_consistent = 0.0;
  double domain_measure = 0.0;
  double kernel_residual = 0.0;  // NaN unless pure Neumann
  // per small function: configuration label and delta^2 K_ii / M_ii
  std::vector<std::pair<char, double>> l2h1_samples;
};

/// Full single-case output, for callers that need the matrices.
struct CaseResult {
  GeometryCase geom;
  ActiveMesh mesh;
  ActiveBasisSet basis;
  SystemMatrices system;   // over the retained active basis, with mhat set
  SystemMatrices reduced;  // after strong Dirichlet
  std::vector<int> small_rows;  // reduced rows of small functions
  BoundReport bounds;
  SpectralReport spectrum;
  TrimConfigReport configs;  // 2D only
  SweepRow row() const;
};

CaseResult run_case(const SweepSpec& spec, double delta);

/// One row per delta, produced by the full pipeline. Deltas run concurrently;
/// the result order matches the delta order regardless of scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with the fixed header
/// delta,lambda1_lumped,lambdan_lumped,lambdan_consistent,min_ratio,max_ratio,
/// infnorm_bound,improved_bound,floor_flags and 17-significant-digit values.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

std::string sweep_file_stem(const SweepSpec& spec);

}  // namespace trimspec
