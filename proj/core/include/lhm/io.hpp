#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lhm/calibration.hpp"
#include "lhm/features.hpp"
#include "lhm/steady_state.hpp"
#include "lhm/sweep.hpp"

namespace lhm::io {

// 17 significant digits, "%.17g".
std::string format_real(double value);

inline constexpr std::string_view kCurveCsvHeader =
    "delta1_over_gamma,re_eps,im_eps,re_mu,im_mu,re_n,im_n,error";

// CSV: one row per grid point, LF line endings. Undefined points carry the
// literal token "undefined" in every response column and the error kind in
// the last column (empty for defined points).
void write_curve_csv(std::ostream& out, const ResponseCurve& curve);
// JSON: {"points": [{"delta1_over_gamma", "eps_r": [re, im], "mu_r", "n",
// "chi_e", "gamma_e", "gamma_m", "error"}]}; undefined points carry null
// response fields and the error kind.
void write_curve_json(std::ostream& out, const ResponseCurve& curve);

// JSON keys in this order: tol_abs, abs_peak {delta1_over_gamma, im_n} or
// null, zero_abs_intervals [[lo, hi]], gain_intervals [{lo, hi, min_im_n,
// delta1_at_min}], neg_eps_intervals, neg_mu_intervals, neg_re_n_intervals.
void write_features_json(std::ostream& out, const FeatureReport& report);
// CSV: feature,lo_over_gamma,hi_over_gamma,value
void write_features_csv(std::ostream& out, const FeatureReport& report);
// Inverse of write_features_json. Throws Error{ParseError}.
FeatureReport read_features_json(std::string_view text);

void write_steady_csv(std::ostream& out, const SteadyStateResult& result, double delta1);
void write_steady_json(std::ostream& out, const SteadyStateResult& result, double delta1);

inline constexpr std::string_view kPhaseCsvHeader = "phi3_rad,re_eps,im_eps,re_mu,im_mu,re_n,im_n,error";
void write_phase_scan_csv(std::ostream& out, const std::vector<PhasePoint>& points);
void write_phase_scan_json(std::ostream& out, const std::vector<PhasePoint>& points, double delta1);

void write_calibration_csv(std::ostream& out, const CalibrationResult& result);
void write_calibration_json(std::ostream& out, const CalibrationResult& result);

}  // namespace lhm::io
