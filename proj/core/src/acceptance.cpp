#include "trimspec/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "trimspec/selfcheck.hpp"
#include "trimspec/slopes.hpp"
#include "trimspec/sweep.hpp"

namespace trimspec {

namespace {

struct SweepRecord {
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

std::vector<double> column(const std::vector<SweepRow>& rows, double SweepRow::*field) {
  std::vector<double> v(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) v[i] = rows[i].*field;
  return v;
}

std::vector<double> deltas_of(const std::vector<SweepRow>& rows) {
  return column(rows, &SweepRow::delta);
}

std::vector<bool> all_usable(const std::vector<SweepRow>& rows) {
  return std::vector<bool>(rows.size(), true);
}

std::vector<bool> above_floor(const std::vector<SweepRow>& rows) {
  std::vector<bool> u(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) u[i] = !rows[i].lambda1_below_floor;
  return u;
}

std::vector<bool> consistent_usable(const std::vector<SweepRow>& rows) {
  std::vector<bool> u(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) u[i] = rows[i].consistent_ok;
  return u;
}

struct CriterionBuilder {
  CriterionResult result;
  std::ostringstream detail;
  explicit CriterionBuilder(int id, std::string title) {
    result.id = id;
    result.title = std::move(title);
    result.pass = true;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      result.pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  void check_fit(const SlopeFit& fit) {
    if (fit.verdict != Verdict::Pass) {
      result.pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << describe(fit);
    }
  }
  CriterionResult finish() {
    result.detail = detail.str();
    if (result.pass && result.detail.empty()) result.detail = "ok";
    return result;
  }
};

std::string spec_label(const SweepSpec& s) {
  return sweep_file_stem(s);
}

// family defaults for the acceptance grid
SweepSpec make_spec(const std::string& family, int p, int k, bool shifted, int jobs) {
  SweepSpec s;
  s.family = family;
  s.p = p;
  s.k = k;
  s.shifted = shifted;
  s.jobs = jobs;
  return s;
}

void run_property_suite(CriterionBuilder& c, const std::vector<SweepRecord>& records,
                        const AcceptanceOptions& opts) {
  std::mt19937 rng(20240517);

  // partition of unity, nonnegativity, local support
  {
    const auto space1 =
        TensorSplineSpace({make_space(5, uniform_breakpoints(0.0, 1.0, 128), 4)});
    const auto space2 = TensorSplineSpace({make_space(3, uniform_breakpoints(0.0, 1.0, 16), 1),
                                           make_space(3, uniform_breakpoints(0.0, 1.0, 16), 1)});
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_pou = 0.0, worst_neg = 0.0;
    bool support_ok = true;
    for (int trial = 0; trial < 10000; ++trial) {
      const double x = unit(rng), y = unit(rng);
      const TensorEval e1 = space1.eval({x, 0.0}, 0);
      const TensorEval e2 = space2.eval({x, y}, 0);
      double s1 = 0.0, s2 = 0.0;
      for (double v : e1.values) {
        s1 += v;
        worst_neg = std::min(worst_neg, v);
      }
      for (double v : e2.values) {
        s2 += v;
        worst_neg = std::min(worst_neg, v);
      }
      worst_pou = std::max({worst_pou, std::abs(s1 - 1.0), std::abs(s2 - 1.0)});
      support_ok = support_ok && e1.values.size() == 6 && e2.values.size() == 16;
    }
    c.check(worst_pou <= 1e-13, "partition of unity off by " + std::to_string(worst_pou));
    c.check(worst_neg >= -1e-15, "negative basis value " + std::to_string(worst_neg));
    c.check(support_ok, "wrong local support count");
  }

  // representative assembled cases: mass consistency, Cauchy-Schwarz,
  // eigenpair residuals
  {
    std::vector<SweepSpec> cases = {make_spec("1d_trim", 3, 2, false, opts.jobs),
                                    make_spec("square_corner", 2, 1, false, opts.jobs),
                                    make_spec("rotated_square", 2, 1, false, opts.jobs),
                                    make_spec("plate_hole", 2, 1, false, opts.jobs)};
    const std::vector<double> ds = {1e-5, 1e-3, 1e-3, 1e-3};
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
      cases[ci].want_vectors = true;
      const CaseResult res = run_case(cases[ci], ds[ci]);
      const std::string label = spec_label(cases[ci]);

      const double mass_sum = res.system.mhat.sum();
      c.check(std::abs(mass_sum - res.mesh.domain_measure) <=
                  1e-12 * res.mesh.domain_measure,
              label + ": lumped mass does not sum to the domain measure");

      const auto& K = res.reduced.K;
      double worst = 0.0;
      for (int i = 0; i < K.rows(); ++i)
        for (int j = 0; j < K.cols(); ++j)
          if (K(i, j) != 0.0)
            worst = std::max(worst, std::abs(K(i, j)) /
                                        std::sqrt(K(i, i) * K(j, j)));
      c.check(worst <= 1.0 + 1e-12, label + ": |K_ij| above sqrt(K_ii K_jj)");

      c.check(res.spectrum.residual1 <= 1e-10,
              label + ": smallest-eigenpair residual " +
                  std::to_string(res.spectrum.residual1));
      c.check(res.spectrum.residualn <= 1e-10,
              label + ": largest-eigenpair residual " +
                  std::to_string(res.spectrum.residualn));

      // quadrature refinement oracle on up to 20 cut elements
      QuadOrder base = default_quad_order(res.geom.space);
      QuadOrder fine{2 * base.rect, 2 * base.triangle};
      std::vector<int> cut;
      for (int e : res.mesh.active)
        if (res.mesh.status[e] == ElemStatus::Cut) cut.push_back(e);
      std::shuffle(cut.begin(), cut.end(), rng);
      if (cut.size() > 20) cut.resize(20);
      double qworst = 0.0;
      for (int e : cut) {
        const auto [K0, M0] =
            element_integrals(res.geom.space, res.mesh, res.geom.region, e, base);
        const auto [K1, M1] =
            element_integrals(res.geom.space, res.mesh, res.geom.region, e, fine);
        // relative to the element block scale
        qworst = std::max(qworst, (K0 - K1).cwiseAbs().maxCoeff() /
                                      K1.diagonal().maxCoeff());
        qworst = std::max(qworst, (M0 - M1).cwiseAbs().maxCoeff() /
                                      M1.diagonal().maxCoeff());
      }
      c.check(qworst < 1e-13,
              label + ": quadrature refinement changed entries by " + std::to_string(qworst));
    }
  }

  // bound ordering across every sweep row
  for (const auto& rec : records)
    for (const auto& row : rec.rows) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s delta=%.1e", spec_label(rec.spec).c_str(),
                    row.delta);
      c.check(row.min_ratio <= row.max_ratio, std::string(buf) + ": min_ratio above max");
      c.check(row.max_ratio <= row.infnorm_bound * (1.0 + 1e-12),
              std::string(buf) + ": max_ratio above the infinity-norm bound");
      c.check(row.infnorm_bound <= row.c_pd * row.max_ratio * (1.0 + 1e-12),
              std::string(buf) + ": infinity-norm bound above the sandwich");
    }

  // equivalence of the H1 seminorm and delta^-2-scaled L2 norm on small
  // functions, per configuration class, across each 2D sweep
  for (const auto& rec : records) {
    if (rec.spec.family == "1d_trim") continue;
    std::map<char, std::pair<double, double>> spread;  // config -> (min, max)
    for (const auto& row : rec.rows)
      for (const auto& [cfg, ratio] : row.l2h1_samples) {
        if (cfg == 'o') continue;
        auto it = spread.find(cfg);
        if (it == spread.end())
          spread[cfg] = {ratio, ratio};
        else {
          it->second.first = std::min(it->second.first, ratio);
          it->second.second = std::max(it->second.second, ratio);
        }
      }
    for (const auto& [cfg, mm] : spread) {
      c.check(mm.second / mm.first < 1e3,
              spec_label(rec.spec) + ": config " + cfg +
                  " H1/L2 ratio spread " + std::to_string(mm.second / mm.first));
    }
  }

  // small-pencil oracle agreement
  {
    // untrimmed 1D hat-function case, n = 5
    const auto space = TensorSplineSpace({make_space(1, uniform_breakpoints(0.0, 1.0, 5), 0)});
    const TrimRegion region = TrimRegion::interval(0.0, 1.0);
    ActiveMesh mesh = classify_elements(space, region);
    partition_good_bad(mesh, 0.5);
    const ActiveBasisSet basis = active_basis(space, mesh);
    SystemMatrices sys = assemble(space, mesh, basis, region, default_quad_order(space));
    sys.mhat = lump_rowsum(sys);
    BoundarySpec bc;
    bc.side = {BC::Dirichlet, BC::Neumann, BC::Neumann, BC::Neumann};
    const SystemMatrices red = apply_dirichlet_strong(sys, bc, space, mesh, region);

    const Eigen::MatrixXd Bh = red.mhat.asDiagonal();
    const Eigen::VectorXd lumped_oracle = eig_inertia_bisection(red.K, Bh, 1e-12);
    const EigResult lumped = gen_eig_lumped(red.K, red.mhat);
    const Eigen::VectorXd cons_oracle = eig_inertia_bisection(red.K, red.M, 1e-12);
    const EigResult cons = gen_eig_consistent(red.K, red.M);
    double worst = 0.0;
    for (int i = 0; i < red.size(); ++i) {
      worst = std::max(worst, std::abs(lumped.values(i) - lumped_oracle(i)) /
                                  std::abs(lumped_oracle(i)));
      worst = std::max(worst, std::abs(cons.values(i) - cons_oracle(i)) /
                                  std::abs(cons_oracle(i)));
    }
    // random SPD pencil, n = 6
    std::normal_distribution<double> nd;
    Eigen::MatrixXd X(6, 6), Y(6, 6);
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 6; ++i) {
        X(i, j) = nd(rng);
        Y(i, j) = nd(rng);
      }
    const Eigen::MatrixXd A = X * X.transpose() + Eigen::MatrixXd::Identity(6, 6);
    const Eigen::MatrixXd B = Y * Y.transpose() + Eigen::MatrixXd::Identity(6, 6);
    const Eigen::VectorXd oracle = eig_inertia_bisection(A, B, 1e-12);
    const EigResult direct = gen_eig_consistent(A, B);
    for (int i = 0; i < 6; ++i)
      worst = std::max(worst,
                       std::abs(direct.values(i) - oracle(i)) / std::abs(oracle(i)));
    c.check(worst <= 1e-9,
            "inertia-bisection oracle disagrees by " + std::to_string(worst));
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_outputs(const std::vector<SweepRecord>& records,
                   const std::vector<CriterionResult>& results,
                   const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& rec : records) {
    std::ostringstream csv;
    write_csv(csv, rec.rows);
    write_text_atomic(std::filesystem::path(out_dir) / (spec_label(rec.spec) + ".csv"),
                      csv.str());
  }
  std::ostringstream rep;
  rep << "acceptance report\n=================\n\n";
  for (const auto& r : results)
    rep << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.title
        << (r.pass ? "" : "\n    " + r.detail) << "\n";
  rep << "\nper-sweep extremes (delta, lambda1, lambdan, dt_c lumped, argmin cfg, "
         "argmax cfg)\n";
  char buf[256];
  for (const auto& rec : records) {
    rep << spec_label(rec.spec) << "\n";
    for (const auto& row : rec.rows) {
      std::snprintf(buf, sizeof(buf), "  %.3e  %.6e  %.6e  %.6e  %-5s  %-5s\n",
                    row.delta, row.lambda1_lumped, row.lambdan_lumped, row.dt_lumped,
                    row.argmin_config.c_str(), row.argmax_config.c_str());
      rep << buf;
    }
  }
  write_text_atomic(std::filesystem::path(out_dir) / "report.txt", rep.str());
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::ostream* log = opts.log;
  auto note = [&](const std::string& line) {
    if (log) (*log) << line << "\n" << std::flush;
  };

  // --- sweep grid -----------------------------------------------------
  std::vector<SweepSpec> grid;
  const std::vector<std::pair<int, int>> one_d_pk = {
      {1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 4}};
  for (auto [p, k] : one_d_pk) grid.push_back(make_spec("1d_trim", p, k, false, opts.jobs));
  const std::vector<std::pair<int, int>> two_d_pk = {{2, 0}, {2, 1}, {3, 0}, {3, 2}};
  const std::vector<std::pair<std::string, bool>> families = {
      {"square_corner", false}, {"house", false},          {"house_wide", false},
      {"rotated_square", false}, {"rotated_square", true}, {"plate_hole", false}};
  for (const auto& [family, shifted] : families)
    for (auto [p, k] : two_d_pk) grid.push_back(make_spec(family, p, k, shifted, opts.jobs));

  std::vector<SweepRecord> records;
  records.reserve(grid.size());
  for (const auto& spec : grid) {
    note("sweep " + spec_label(spec) + (spec.shifted ? " (shifted)" : "") + " ...");
    records.push_back({spec, run_sweep(spec)});
  }

  auto find = [&](const std::string& family, int p, int k,
                  bool shifted = false) -> const SweepRecord& {
    for (const auto& rec : records)
      if (rec.spec.family == family && rec.spec.p == p && rec.spec.k == k &&
          rec.spec.shifted == shifted)
        return rec;
    throw std::logic_error("acceptance: missing sweep record");
  };

  std::vector<CriterionResult> results;

  // --- 1: 1D largest eigenvalue, lumped mass --------------------------
  {
    CriterionBuilder c(1, "1D lumped largest-eigenvalue exponent");
    for (auto [p, k] : one_d_pk) {
      const auto& rec = find("1d_trim", p, k);
      SlopeFit fit = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambdan_lumped),
                               all_usable(rec.rows), spec_label(rec.spec) + " lambdan_lumped");
      judge(fit, k == 0 ? -1.0 : 0.0, 0.05);
      c.check_fit(fit);
    }
    results.push_back(c.finish());
  }

  // --- 2: 1D largest eigenvalue, consistent mass ----------------------
  {
    CriterionBuilder c(2, "1D consistent largest-eigenvalue exponent");
    for (auto [p, k] : one_d_pk) {
      const auto& rec = find("1d_trim", p, k);
      SlopeFit fit =
          fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambdan_consistent),
                    consistent_usable(rec.rows), spec_label(rec.spec) + " lambdan_consistent");
      judge(fit, -2.0, 0.05);
      c.check_fit(fit);
      for (const auto& row : rec.rows)
        c.check(row.consistent_ok, spec_label(rec.spec) + ": consistent solve failed");
    }
    results.push_back(c.finish());
  }

  // --- 3: 1D smallest eigenvalue and its bound ------------------------
  {
    CriterionBuilder c(3, "1D smallest-eigenvalue bound exponent");
    for (auto [p, k] : one_d_pk) {
      const auto& rec = find("1d_trim", p, k);
      SlopeFit bound = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::min_ratio),
                                 all_usable(rec.rows), spec_label(rec.spec) + " min_ratio");
      judge(bound, std::max(p - 2, 0), 0.05);
      c.check_fit(bound);

      const auto usable = above_floor(rec.rows);
      SlopeFit l1 = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambda1_lumped),
                              usable, spec_label(rec.spec) + " lambda1_lumped");
      SlopeFit bound_same = fit_slope(deltas_of(rec.rows),
                                      column(rec.rows, &SweepRow::min_ratio), usable,
                                      spec_label(rec.spec) + " min_ratio(samerows)");
      judge(l1, bound_same.slope, 0.1);
      c.check_fit(l1);
    }
    results.push_back(c.finish());
  }

  // --- 4: sandwich bound on every assembled case ----------------------
  {
    CriterionBuilder c(4, "sandwich bound on every case");
    for (const auto& rec : records) {
      const int cap = rec.spec.family == "1d_trim"
                          ? 2 * rec.spec.p + 1
                          : (2 * rec.spec.p + 1) * (2 * rec.spec.p + 1);
      for (const auto& row : rec.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s delta=%.1e", spec_label(rec.spec).c_str(),
                      row.delta);
        c.check(row.max_ratio <= row.lambdan_lumped * (1.0 + 1e-10),
                std::string(buf) + ": max_ratio above lambdan");
        c.check(row.lambdan_lumped <= row.c_pd * row.max_ratio * (1.0 + 1e-10),
                std::string(buf) + ": lambdan above c_pd*max_ratio");
        c.check(row.c_pd <= cap, std::string(buf) + ": c_pd above the degree cap");
      }
    }
    results.push_back(c.finish());
  }

  // --- 5: lumping does not decrease the critical time step ------------
  {
    CriterionBuilder c(5, "lumped lambdan below consistent lambdan");
    for (const auto& rec : records)
      for (const auto& row : rec.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s delta=%.1e", spec_label(rec.spec).c_str(),
                      row.delta);
        c.check(row.consistent_ok, std::string(buf) + ": consistent solve failed");
        if (row.consistent_ok)
          c.check(row.lambdan_lumped <= row.lambdan_consistent * (1.0 + 1e-10),
                  std::string(buf) + ": lumped lambdan above consistent");
      }
    results.push_back(c.finish());
  }

  // --- helpers shared by the 2D criteria -------------------------------
  auto check_2d_lambdan = [&](CriterionBuilder& c, const SweepRecord& rec) {
    SlopeFit fit = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambdan_lumped),
                             all_usable(rec.rows), spec_label(rec.spec) + " lambdan_lumped");
    judge(fit, rec.spec.k == 0 ? -1.0 : 0.0, 0.1);
    c.check_fit(fit);
  };
  auto check_min_ratio = [&](CriterionBuilder& c, const SweepRecord& rec, double predicted) {
    SlopeFit fit = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::min_ratio),
                             all_usable(rec.rows), spec_label(rec.spec) + " min_ratio");
    judge(fit, predicted, 0.1);
    c.check_fit(fit);
  };
  auto check_l1_tracks = [&](CriterionBuilder& c, const SweepRecord& rec,
                             double SweepRow::*ref_field, const char* ref_name,
                             double tol) {
    const auto usable = above_floor(rec.rows);
    SlopeFit l1 = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambda1_lumped),
                            usable, spec_label(rec.spec) + " lambda1_lumped");
    SlopeFit ref = fit_slope(deltas_of(rec.rows), column(rec.rows, ref_field), usable,
                             spec_label(rec.spec) + " " + ref_name);
    judge(l1, ref.slope, tol);
    c.check_fit(l1);
  };
  auto check_chain = [&](CriterionBuilder& c, const SweepRecord& rec) {
    for (const auto& row : rec.rows) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s delta=%.1e", spec_label(rec.spec).c_str(),
                    row.delta);
      c.check(row.lambda1_lumped <= row.improved_bound * (1.0 + 1e-10),
              std::string(buf) + ": lambda1 above improved bound");
      c.check(row.improved_bound <= row.min_ratio * (1.0 + 1e-10),
              std::string(buf) + ": improved bound above min_ratio");
    }
  };

  // --- 6: trimmed-corner square ----------------------------------------
  {
    CriterionBuilder c(6, "trimmed-corner square exponents");
    for (auto [p, k] : two_d_pk) {
      const auto& rec = find("square_corner", p, k);
      check_2d_lambdan(c, rec);
      check_min_ratio(c, rec, 2 * p - 2);
      check_l1_tracks(c, rec, &SweepRow::min_ratio, "min_ratio", 0.15);
    }
    results.push_back(c.finish());
  }

  // --- 7: house (corner + edge cuts) ----------------------------------
  {
    CriterionBuilder c(7, "house exponents");
    for (auto [p, k] : two_d_pk) {
      const auto& rec = find("house", p, k);
      check_2d_lambdan(c, rec);
      check_min_ratio(c, rec, 2 * p - 2);
    }
    results.push_back(c.finish());
  }

  // --- 8: wide house (edge cut isolated) ------------------------------
  {
    CriterionBuilder c(8, "wide house exponents and improved bound");
    for (auto [p, k] : two_d_pk) {
      const auto& rec = find("house_wide", p, k);
      check_min_ratio(c, rec, std::max(p - 2, 0));
      check_chain(c, rec);
      check_l1_tracks(c, rec, &SweepRow::improved_bound, "improved_bound", 0.15);
    }
    results.push_back(c.finish());
  }

  // --- 9: rotated squares (pure Neumann, deflated) ---------------------
  {
    CriterionBuilder c(9, "rotated square exponents, kernel deflation");
    for (bool shifted : {false, true}) {
      for (auto [p, k] : two_d_pk) {
        const auto& rec = find("rotated_square", p, k, shifted);
        for (const auto& row : rec.rows) {
          char buf[160];
          std::snprintf(buf, sizeof(buf), "%s delta=%.1e", spec_label(rec.spec).c_str(),
                        row.delta);
          c.check(row.kernel_residual <= 1e-10,
                  std::string(buf) + ": stiffness does not annihilate constants");
        }
        check_2d_lambdan(c, rec);
        if (!shifted) {
          check_min_ratio(c, rec, 2 * p - 2);
        } else {
          check_min_ratio(c, rec, std::max(p - 2, 0));
          check_chain(c, rec);
          check_l1_tracks(c, rec, &SweepRow::improved_bound, "improved_bound", 0.15);
        }
      }
    }
    results.push_back(c.finish());
  }

  // --- 10: plate with holes (corner cuts only) -------------------------
  {
    CriterionBuilder c(10, "plate-with-holes exponents");
    for (auto [p, k] : two_d_pk) {
      const auto& rec = find("plate_hole", p, k);
      SlopeFit fit = fit_slope(deltas_of(rec.rows), column(rec.rows, &SweepRow::lambdan_lumped),
                               all_usable(rec.rows), spec_label(rec.spec) + " lambdan_lumped");
      judge(fit, 0.0, 0.1);
      c.check_fit(fit);
      check_min_ratio(c, rec, 2 * p - 2);
      check_l1_tracks(c, rec, &SweepRow::min_ratio, "min_ratio", 0.15);
    }
    results.push_back(c.finish());
  }

  // --- 11: property suite ----------------------------------------------
  {
    CriterionBuilder c(11, "property suite");
    run_property_suite(c, records, opts);
    results.push_back(c.finish());
  }

  for (const auto& r : results) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "criterion %2d: %s - ", r.id,
                  r.pass ? "PASS" : "FAIL");
    note(buf + r.title + (r.pass ? "" : " [" + r.detail + "]"));
  }

  if (!opts.out_dir.empty()) write_outputs(records, results, opts.out_dir);
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace trimspec
