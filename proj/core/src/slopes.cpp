#include "trimspec/slopes.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace trimspec {

SlopeFit fit_slope(const std::vector<double>& deltas, const std::vector<double>& values,
                   const std::vector<bool>& usable, const std::string& quantity) {
  if (deltas.size() != values.size() || deltas.size() != usable.size())
    throw std::invalid_argument("fit_slope: size mismatch");
  SlopeFit fit;
  fit.quantity = quantity;

  std::vector<double> x, y;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!usable[i]) continue;
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) continue;
    x.push_back(std::log(deltas[i]));
    y.push_back(std::log(values[i]));
  }
  fit.n_used = static_cast<int>(x.size());
  if (fit.n_used < 3) return fit;  // InsufficientData until judged

  const int n = fit.n_used;
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.slope = sxy / sxx;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - my - fit.slope * (x[i] - mx);
    ssr += r * r;
  }
  fit.std_error = n > 2 ? std::sqrt(ssr / (n - 2) / sxx) : 0.0;
  return fit;
}

SlopeFit& judge(SlopeFit& fit, double predicted, double tolerance) {
  fit.predicted = predicted;
  fit.tolerance = tolerance;
  fit.checked = true;
  if (fit.n_used < 3)
    fit.verdict = Verdict::InsufficientData;
  else
    fit.verdict = std::abs(fit.slope - predicted) <= tolerance ? Verdict::Pass
                                                               : Verdict::Fail;
  return fit;
}

ExponentPrediction predicted_exponents(int p, int k, bool one_d,
                                       const std::set<TrimConfig>& configs) {
  for (auto c : configs)
    if (c == TrimConfig::Other)
      throw std::invalid_argument("predicted_exponents: no prediction for 'other'");
  ExponentPrediction pred;
  const bool directional_cut =
      one_d || configs.count(TrimConfig::A) || configs.count(TrimConfig::B);
  pred.lambdan_lumped = (directional_cut && k == 0) ? -1.0 : 0.0;

  double decay = 0.0;
  if (one_d || configs.count(TrimConfig::A) || configs.count(TrimConfig::B))
    decay = std::max(decay, static_cast<double>(std::max(p - 2, 0)));
  if (configs.count(TrimConfig::C))
    decay = std::max(decay, static_cast<double>(std::max(2 * p - 2, 0)));
  pred.lambda1_bound = decay;
  pred.lambdan_consistent = -2.0;
  return pred;
}

FamilyConfigs family_configs(const std::string& family, bool shifted) {
  if (family == "1d_trim") return {true, {}};
  if (family == "square_corner") return {false, {TrimConfig::A, TrimConfig::C}};
  if (family == "house") return {false, {TrimConfig::B, TrimConfig::C}};
  if (family == "house_wide") return {false, {TrimConfig::B}};
  if (family == "rotated_square")
    return shifted ? FamilyConfigs{false, {TrimConfig::B}}
                   : FamilyConfigs{false, {TrimConfig::B, TrimConfig::C}};
  if (family == "plate_hole") return {false, {TrimConfig::C}};
  throw std::invalid_argument("family_configs: unknown family " + family);
}

std::string describe(const SlopeFit& fit) {
  char buf[256];
  if (fit.n_used < 3) {
    std::snprintf(buf, sizeof(buf), "%-28s insufficient data (%d usable points)",
                  fit.quantity.c_str(), fit.n_used);
    return buf;
  }
  std::snprintf(buf, sizeof(buf),
                "%-28s slope %+.4f +- %.4f (n=%d) expected %+.2f tol %.2f -> %s",
                fit.quantity.c_str(), fit.slope, fit.std_error, fit.n_used,
                fit.predicted, fit.tolerance,
                fit.verdict == Verdict::Pass   ? "pass"
                : fit.verdict == Verdict::Fail ? "FAIL"
                                               : "insufficient");
  return buf;
}

}  // namespace trimspec
