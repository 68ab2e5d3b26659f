#pragma once

#include <set>
#include <string>
#include <vector>

#include "trimspec/trim_config.hpp"

namespace trimspec {

enum class Verdict { Pass, Fail, InsufficientData };

/// Least-squares exponent of value ~ delta^slope on log-log axes.
struct SlopeFit {
  std::string quantity;
  double slope = 0.0;
  double std_error = 0.0;
  int n_used = 0;
  double predicted = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::InsufficientData;
  bool checked = false;
};

/// Ordinary least squares on (log delta, log value). Rows flagged unusable
/// and rows with nonpositive values are excluded; fewer than 3 usable points
/// yields InsufficientData, never a silent pass.
SlopeFit fit_slope(const std::vector<double>& deltas, const std::vector<double>& values,
                   const std::vector<bool>& usable, const std::string& quantity);

/// Attach a prediction and tolerance, setting the verdict.
SlopeFit& judge(SlopeFit& fit, double predicted, double tolerance);

/// Trim-direction smoothness enters through k: the largest eigenvalue bound
/// blows up like 1/delta only when a one-directional cut (1D, A or B) meets a
/// C^0 line.
struct ExponentPrediction {
  double lambda1_bound = 0.0;       // decay exponent of min_i K_ii/Mhat_ii
  double lambdan_lumped = 0.0;      // 0 or -1
  double lambdan_consistent = -2.0;
};

/// `one_d` marks the 1D trim; `configs` are the 2D configurations present.
ExponentPrediction predicted_exponents(int p, int k, bool one_d,
                                       const std::set<TrimConfig>& configs);

/// Configurations produced by each shipped geometry family.
struct FamilyConfigs {
  bool one_d = false;
  std::set<TrimConfig> configs;
};
FamilyConfigs family_configs(const std::string& family, bool shifted);

std::string describe(const SlopeFit& fit);

}  // namespace trimspec
