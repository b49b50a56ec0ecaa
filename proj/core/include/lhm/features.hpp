#pragma once

#include <optional>
#include <vector>

#include "lhm/sweep.hpp"

namespace lhm {

inline constexpr double kDefaultTolAbs = 0.02;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

struct GainInterval {
  double lo = 0.0;
  double hi = 0.0;
  double minimum = 0.0;        // most negative Im n inside
  double delta1_at_min = 0.0;  // grid point of that minimum

  Interval span() const { return {lo, hi}; }
  bool operator==(const GainInterval&) const = default;
};

struct AbsorptionPeak {
  double delta1 = 0.0;
  double im_n = 0.0;

  bool operator==(const AbsorptionPeak&) const = default;
};

// Structure of a detuning sweep. Intervals are sorted, disjoint, inside the
// sweep range, and each covers at least two consecutive grid points.
struct FeatureReport {
  std::optional<AbsorptionPeak> abs_peak;  // absent when max Im n <= tol_abs
  std::vector<Interval> zero_abs_intervals;  // |Im n| <= tol_abs
  std::vector<GainInterval> gain_intervals;  // Im n < -tol_abs
  std::vector<Interval> neg_eps_intervals;   // Re eps_r < 0
  std::vector<Interval> neg_mu_intervals;    // Re mu_r < 0
  std::vector<Interval> neg_re_n_intervals;  // Re n < 0
  double tol_abs = kDefaultTolAbs;

  bool operator==(const FeatureReport&) const = default;
};

// Peak is the grid argmax of Im n (first on ties). Interval ends are linearly
// interpolated to the threshold crossing between the bracketing grid points;
// an end next to an undefined point or the sweep boundary stays on the grid.
// Throws AllUndefined when the curve has no defined point.
FeatureReport extract_features(const ResponseCurve& curve, double tol_abs = kDefaultTolAbs);

// Same as extract_features over raw samples of (delta1, Im n, Re eps, Re mu,
// Re n); used for synthetic curves.
struct FeatureSample {
  double delta1 = 0.0;
  std::optional<double> im_n;
  std::optional<double> re_eps;
  std::optional<double> re_mu;
  std::optional<double> re_n;
};
FeatureReport extract_features(const std::vector<FeatureSample>& samples, double tol_abs);

}  // namespace lhm
