#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lhm/features.hpp"
#include "lhm/sweep.hpp"

namespace lhm {

// Weights of the calibration loss. Each term is dimensionless and roughly
// O(1) when the corresponding feature is entirely wrong.
struct LossWeights {
  double peak_value = 1.0;         // ((peak - target) / target)^2
  double peak_location = 1.0;      // 1 if the Im n argmax lies outside the peak window
  double neg_eps_band = 0.5;       // fraction of the band with Re eps >= 0
  double neg_mu_band = 0.5;        // fraction of the band with Re mu >= 0
  double zero_abs_coverage = 0.5;  // fraction of zero-abs windows with |Im n| > tol
  double zero_abs_residual = 0.25; // |mean |Im n| in zero-abs windows - level| / tol
  double gain_coverage = 0.5;      // fraction of gain windows with Im n >= -tol
  double gain_depth = 0.5;         // mean relative error of gain minima
  double flank_structure = 1.0;    // missing (zero-abs, gain) pairs on either side of the peak, / 4
};

struct CalibrationTargets {
  double peak_value = 0.65;
  double peak_delta1 = 0.0;
  double peak_window = 5.0;  // the peak must sit within peak_delta1 +- window
  Interval neg_band{-100.0, 100.0};
  std::vector<Interval> zero_abs;
  std::optional<double> zero_abs_level;  // target mean |Im n| inside zero_abs
  std::vector<Interval> gain;
  std::vector<double> gain_minima;  // empty, or one target per gain window
  double tol_abs = kDefaultTolAbs;
  LossWeights weights{};

  void validate() const;

  // fig2 targets: peak ~0.65 at resonance, negative eps and mu over
  // [-100, 100], zero absorption in [-39, -9] and [8, 36], gain in
  // [-74, -39] and [36, 59]. No gain depth target.
  static CalibrationTargets figure2();
  // fig3 targets: peak 2, zero absorption [-98, -17] and [12, 96],
  // gain in [-138, -98] and [96, 128] with minima about -0.3.
  static CalibrationTargets figure3();
  // Targets that a forward run with `report` would meet exactly.
  static CalibrationTargets from_report(const FeatureReport& report, Interval neg_band);
};

struct LossBreakdown {
  double peak_value = 0.0;
  double peak_location = 0.0;
  double neg_eps_band = 0.0;
  double neg_mu_band = 0.0;
  double zero_abs_coverage = 0.0;
  double zero_abs_residual = 0.0;
  double gain_coverage = 0.0;
  double gain_depth = 0.0;
  double flank_structure = 0.0;
  double total = 0.0;

  // Unweighted band coverage, used for the feasibility test.
  double eps_band_fraction = 0.0;
  double mu_band_fraction = 0.0;
};

// Loss of one curve against the targets.
LossBreakdown calibration_loss(const ResponseCurve& curve, const CalibrationTargets& targets);

struct SearchRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 41;  // log-spaced; a collapsed range uses a single point

  void validate(const char* name) const;
  std::vector<double> grid() const;
};

struct CalibrationOptions {
  std::size_t max_refinements = 200;
  double min_step_decades = 1e-4;
  ExecutionOptions exec{};
};

struct CalibrationResult {
  double d21 = 0.0;
  double mu42 = 0.0;
  double score = 0.0;
  LossBreakdown breakdown;
  std::vector<double> trace;  // best score after the grid stage and each refinement pass
  std::size_t evaluations = 0;
};

// Log grid over (d21, mu42) followed by coordinate refinement in log space,
// kept inside the search box. Ties go to the smallest d21, then the smallest
// mu42. Throws NoFeasiblePoint when no grid point has Re eps < 0 and
// Re mu < 0 over at least half of the target band.
CalibrationResult calibrate_dipoles(const CalibrationTargets& targets, const SweepSpec& base,
                                    const SearchRange& d21_range, const SearchRange& mu42_range,
                                    const CalibrationOptions& options = {});

}  // namespace lhm
