#include "trimspec/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace trimspec {

std::vector<double> default_deltas(const std::string& family) {
  if (family == "1d_trim")
    return {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  std::vector<double> d(7);
  for (int j = 0; j < 7; ++j) d[j] = std::pow(10.0, -2.0 - 0.5 * j);
  return d;
}

SweepRow CaseResult::row() const {
  SweepRow r;
  r.delta = geom.delta;
  r.lambda1_lumped = spectrum.lambda1_lumped;
  r.lambdan_lumped = spectrum.lambdan_lumped;
  r.lambdan_consistent = spectrum.lambdan_consistent;
  r.min_ratio = bounds.min_ratio;
  r.max_ratio = bounds.max_ratio;
  r.infnorm_bound = bounds.infnorm_bound;
  r.improved_bound = bounds.improved_lambda1_upper;
  r.lambda1_below_floor = spectrum.lambda1_below_floor;
  r.consistent_ok = spectrum.consistent_ok;
  r.n = reduced.size();
  r.c_pd = bounds.c_pd;
  r.n_small = static_cast<int>(small_rows.size());
  r.argmin_global = bounds.argmin >= 0 ? reduced.active[bounds.argmin] : -1;
  r.argmax_global = bounds.argmax >= 0 ? reduced.active[bounds.argmax] : -1;
  for (const auto& e : configs.entries) {
    if (e.global_index == r.argmin_global) r.argmin_config = to_string(e.config);
    if (e.global_index == r.argmax_global) r.argmax_config = to_string(e.config);
  }
  r.dt_lumped = spectrum.dt_lumped;
  r.dt_consistent = spectrum.dt_consistent;
  r.domain_measure = mesh.domain_measure;
  r.kernel_residual = spectrum.kernel_residual;
  for (const auto& e : configs.entries) {
    const int pos = basis.pos_of_global[e.global_index];
    if (pos < 0) continue;
    const double kii = system.K(pos, pos), mii = system.M(pos, pos);
    if (mii > 0.0)
      r.l2h1_samples.emplace_back(to_string(e.config)[0],
                                  geom.delta * geom.delta * kii / mii);
  }
  return r;
}

CaseResult run_case(const SweepSpec& spec, double delta) {
  CaseResult out;
  const int k = spec.k < 0 ? spec.p - 1 : spec.k;
  out.geom = make_geometry(spec.family, spec.N, spec.p, k, delta, spec.shifted);

  out.mesh = classify_elements(out.geom.space, out.geom.region);
  partition_good_bad(out.mesh, spec.gamma);
  out.basis = active_basis(out.geom.space, out.mesh);

  QuadOrder order = default_quad_order(out.geom.space);
  if (spec.q_rect > 0) order.rect = spec.q_rect;
  if (spec.q_tri > 0) order.triangle = spec.q_tri;
  out.system = assemble(out.geom.space, out.mesh, out.basis, out.geom.region, order);
  out.system.mhat = lump_rowsum(out.system);

  out.reduced = apply_dirichlet_strong(out.system, out.geom.boundary, out.geom.space,
                                       out.mesh, out.geom.region);

  for (int r = 0; r < out.reduced.size(); ++r) {
    const int pos = out.basis.pos_of_global[out.reduced.active[r]];
    if (pos >= 0 && out.basis.small[pos]) out.small_rows.push_back(r);
  }
  out.bounds = bound_report(out.reduced.K, out.reduced.mhat, out.small_rows);

  EigOptions opts;
  opts.want_vectors = spec.want_vectors;
  out.spectrum = spectral_report(out.reduced, opts);

  if (out.geom.space.num_dirs() == 2)
    out.configs = classify_small_functions(out.geom.space, out.mesh, out.basis,
                                           out.geom.region, delta);
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<double> deltas = spec.deltas.empty() ? default_deltas(spec.family) : spec.deltas;
  if (deltas.size() < 4)
    throw std::invalid_argument("run_sweep: need at least 4 trimming parameters");
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1]))
      throw std::invalid_argument("run_sweep: deltas must be descending");

  const int njobs = spec.jobs > 0
                        ? spec.jobs
                        : std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows(deltas.size());
  std::vector<std::string> errors(deltas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= deltas.size()) return;
      try {
        rows[i] = run_case(spec, deltas[i]).row();
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  if (njobs == 1 || deltas.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int nt = std::min<std::size_t>(njobs, deltas.size());
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < deltas.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("run_sweep: delta=" + std::to_string(deltas[i]) + ": " +
                               errors[i]);
  return rows;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "delta,lambda1_lumped,lambdan_lumped,lambdan_consistent,min_ratio,max_ratio,"
        "infnorm_bound,improved_bound,floor_flags\n";
  for (const auto& r : rows) {
    std::string flags;
    if (r.lambda1_below_floor) flags = "l1floor";
    if (!r.consistent_ok) flags += flags.empty() ? "consfail" : "|consfail";
    if (flags.empty()) flags = "-";
    os << fmt17(r.delta) << ',' << fmt17(r.lambda1_lumped) << ','
       << fmt17(r.lambdan_lumped) << ',' << fmt17(r.lambdan_consistent) << ','
       << fmt17(r.min_ratio) << ',' << fmt17(r.max_ratio) << ','
       << fmt17(r.infnorm_bound) << ',' << fmt17(r.improved_bound) << ',' << flags
       << '\n';
  }
}

std::string sweep_file_stem(const SweepSpec& spec) {
  const int k = spec.k < 0 ? spec.p - 1 : spec.k;
  std::string stem = spec.family;
  if (spec.family == "rotated_square" && spec.shifted) stem += "_shifted";
  stem += "_p" + std::to_string(spec.p) + "_k" + std::to_string(k);
  if (spec.N > 0) stem += "_N" + std::to_string(spec.N);
  return stem;
}

}  // namespace trimspec
