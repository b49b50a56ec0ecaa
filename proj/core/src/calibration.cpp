#include "lhm/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace lhm {

namespace {

bool inside(double x, const Interval& iv) { return x >= iv.lo && x <= iv.hi; }

bool inside_any(double x, const std::vector<Interval>& ivs) {
  return std::any_of(ivs.begin(), ivs.end(), [x](const Interval& iv) { return inside(x, iv); });
}

// Missing structural features around the absorption peak: on each side a
// zero-absorption interval and, beyond it, a gain interval. Returns 0..4.
int missing_flank_features(const FeatureReport& report) {
  if (!report.abs_peak) return 4;
  const double peak = report.abs_peak->delta1;
  int missing = 0;

  const Interval* left = nullptr;
  const Interval* right = nullptr;
  for (const Interval& z : report.zero_abs_intervals) {
    if (z.hi <= peak) left = &z;
    if (z.lo >= peak && right == nullptr) right = &z;
  }
  if (left == nullptr) {
    missing += 2;
  } else {
    const bool gain = std::any_of(report.gain_intervals.begin(), report.gain_intervals.end(),
                                  [&](const GainInterval& g) { return g.hi <= left->lo; });
    missing += gain ? 0 : 1;
  }
  if (right == nullptr) {
    missing += 2;
  } else {
    const bool gain = std::any_of(report.gain_intervals.begin(), report.gain_intervals.end(),
                                  [&](const GainInterval& g) { return g.lo >= right->hi; });
    missing += gain ? 0 : 1;
  }
  return missing;
}

struct Candidate {
  double d21;
  double mu42;
  LossBreakdown loss;
};

// Strictly better, or equal score with smaller (d21, mu42).
bool better(const Candidate& a, const Candidate& b) {
  if (a.loss.total != b.loss.total) return a.loss.total < b.loss.total;
  if (a.d21 != b.d21) return a.d21 < b.d21;
  return a.mu42 < b.mu42;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void CalibrationTargets::validate() const {
  if (!(peak_value > 0.0)) raise(ErrorKind::ValidationError, "target peak value must be > 0");
  if (!(peak_window >= 0.0)) raise(ErrorKind::ValidationError, "peak window must be >= 0");
  if (!(tol_abs > 0.0)) raise(ErrorKind::ValidationError, "tol_abs must be > 0");
  if (!gain_minima.empty() && gain_minima.size() != gain.size()) {
    raise(ErrorKind::ValidationError, "gain_minima must be empty or match the gain windows");
  }
}

CalibrationTargets CalibrationTargets::figure2() {
  CalibrationTargets t;
  t.peak_value = 0.65;
  t.neg_band = {-100.0, 100.0};
  t.zero_abs = {{-39.0, -9.0}, {8.0, 36.0}};
  t.zero_abs_level = 0.0;
  t.gain = {{-74.0, -39.0}, {36.0, 59.0}};
  return t;
}

CalibrationTargets CalibrationTargets::figure3() {
  CalibrationTargets t;
  t.peak_value = 2.0;
  t.peak_delta1 = -2.5;
  t.peak_window = 14.5;  // absorption peak somewhere in [-17, 12]
  t.neg_band = {-150.0, 150.0};
  t.zero_abs = {{-98.0, -17.0}, {12.0, 96.0}};
  t.zero_abs_level = 0.0;
  t.gain = {{-138.0, -98.0}, {96.0, 128.0}};
  t.gain_minima = {-0.3, -0.3};
  return t;
}

CalibrationTargets CalibrationTargets::from_report(const FeatureReport& report, Interval neg_band) {
  if (!report.abs_peak) raise(ErrorKind::ValidationError, "report has no absorption peak to target");
  CalibrationTargets t;
  t.peak_value = report.abs_peak->im_n;
  t.peak_delta1 = report.abs_peak->delta1;
  t.peak_window = 0.0;
  t.neg_band = neg_band;
  t.zero_abs = report.zero_abs_intervals;
  for (const GainInterval& g : report.gain_intervals) {
    t.gain.push_back(g.span());
    t.gain_minima.push_back(g.minimum);
  }
  t.tol_abs = report.tol_abs;
  return t;
}

LossBreakdown calibration_loss(const ResponseCurve& curve, const CalibrationTargets& targets) {
  const LossWeights& w = targets.weights;
  const double tol = targets.tol_abs;
  LossBreakdown out;

  const CurvePoint* peak = nullptr;
  std::size_t band_total = 0, band_eps = 0, band_mu = 0;
  std::size_t zero_total = 0, zero_ok = 0;
  double zero_abs_sum = 0.0;
  std::size_t gain_total = 0, gain_ok = 0;
  std::vector<double> gain_min(targets.gain.size(), std::numeric_limits<double>::infinity());

  for (const CurvePoint& p : curve.points) {
    const bool in_band = inside(p.delta1, targets.neg_band);
    const bool in_zero = inside_any(p.delta1, targets.zero_abs);
    const bool in_gain = inside_any(p.delta1, targets.gain);
    band_total += in_band;
    zero_total += in_zero;
    gain_total += in_gain;
    if (!p.response) continue;
    const MediumResponse& r = *p.response;
    const double im = r.n.imag();
    if (peak == nullptr || im > peak->response->n.imag()) peak = &p;
    if (in_band) {
      band_eps += r.eps_r.real() < 0.0;
      band_mu += r.mu_r.real() < 0.0;
    }
    if (in_zero) {
      zero_ok += std::abs(im) <= tol;
      zero_abs_sum += std::abs(im);
    }
    if (in_gain) gain_ok += im < -tol;
    for (std::size_t k = 0; k < targets.gain.size(); ++k) {
      if (inside(p.delta1, targets.gain[k])) gain_min[k] = std::min(gain_min[k], im);
    }
  }

  if (peak == nullptr) {
    out.total = std::numeric_limits<double>::infinity();
    return out;
  }

  const double pk = peak->response->n.imag();
  out.peak_value = w.peak_value * std::pow((pk - targets.peak_value) / targets.peak_value, 2);
  out.peak_location =
      std::abs(peak->delta1 - targets.peak_delta1) > targets.peak_window ? w.peak_location : 0.0;

  out.eps_band_fraction = band_total ? static_cast<double>(band_eps) / band_total : 1.0;
  out.mu_band_fraction = band_total ? static_cast<double>(band_mu) / band_total : 1.0;
  out.neg_eps_band = w.neg_eps_band * (1.0 - out.eps_band_fraction);
  out.neg_mu_band = w.neg_mu_band * (1.0 - out.mu_band_fraction);

  if (zero_total > 0) {
    out.zero_abs_coverage = w.zero_abs_coverage * (1.0 - static_cast<double>(zero_ok) / zero_total);
    if (targets.zero_abs_level) {
      const double mean = zero_abs_sum / static_cast<double>(zero_total);
      out.zero_abs_residual = w.zero_abs_residual * std::abs(mean - *targets.zero_abs_level) / tol;
    }
  }
  if (gain_total > 0) {
    out.gain_coverage = w.gain_coverage * (1.0 - static_cast<double>(gain_ok) / gain_total);
  }
  if (!targets.gain_minima.empty()) {
    double acc = 0.0;
    for (std::size_t k = 0; k < gain_min.size(); ++k) {
      const double target = targets.gain_minima[k];
      const double got = std::isfinite(gain_min[k]) ? gain_min[k] : 0.0;
      acc += std::abs(got - target) / std::max(std::abs(target), tol);
    }
    out.gain_depth = w.gain_depth * acc / static_cast<double>(gain_min.size());
  }

  const FeatureReport report = extract_features(curve, tol);
  out.flank_structure = w.flank_structure * missing_flank_features(report) / 4.0;

  out.total = out.peak_value + out.peak_location + out.neg_eps_band + out.neg_mu_band +
              out.zero_abs_coverage + out.zero_abs_residual + out.gain_coverage + out.gain_depth +
              out.flank_structure;
  return out;
}

void SearchRange::validate(const char* name) const {
  if (!(lo > 0.0) || !(hi > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    raise(ErrorKind::ValidationError, std::string(name) + " search range must be positive and finite");
  }
  if (hi < lo) raise(ErrorKind::ValidationError, std::string(name) + " search range has hi < lo");
  if (points < 1) raise(ErrorKind::ValidationError, std::string(name) + " search range needs >= 1 point");
}

std::vector<double> SearchRange::grid() const {
  if (lo == hi || points == 1) return {lo};
  std::vector<double> g(points);
  const double span = std::log10(hi / lo);
  for (std::size_t k = 0; k < points; ++k) {
    g[k] = lo * std::pow(10.0, span * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

CalibrationResult calibrate_dipoles(const CalibrationTargets& targets, const SweepSpec& base,
                                    const SearchRange& d21_range, const SearchRange& mu42_range,
                                    const CalibrationOptions& options) {
  targets.validate();
  base.validate();
  d21_range.validate("d21");
  mu42_range.validate("mu42");

  const std::vector<double> grid = base.grid();
  const CoherenceCurve coherences = coherence_sweep(base.params, grid, options.exec);

  auto evaluate = [&](double d21, double mu42) {
    MediumParams medium = base.medium;
    medium.d21 = d21;
    medium.mu42 = mu42;
    return Candidate{d21, mu42, calibration_loss(responses_from_coherences(coherences, medium, base.branch), targets)};
  };

  const std::vector<double> d21_grid = d21_range.grid();
  const std::vector<double> mu42_grid = mu42_range.grid();
  std::vector<Candidate> scored(d21_grid.size() * mu42_grid.size());
  detail::parallel_for(scored.size(), options.exec.threads, [&](std::size_t idx) {
    scored[idx] = evaluate(d21_grid[idx / mu42_grid.size()], mu42_grid[idx % mu42_grid.size()]);
  });

  CalibrationResult result;
  result.evaluations = scored.size();

  const Candidate* best = nullptr;
  double best_eps = 0.0, best_mu = 0.0;
  for (const Candidate& c : scored) {
    best_eps = std::max(best_eps, c.loss.eps_band_fraction);
    best_mu = std::max(best_mu, c.loss.mu_band_fraction);
    const bool feasible = c.loss.eps_band_fraction >= 0.5 && c.loss.mu_band_fraction >= 0.5;
    if (!feasible) continue;
    if (best == nullptr || better(c, *best)) best = &c;
  }
  if (best == nullptr) {
    raise(ErrorKind::NoFeasiblePoint,
          "no grid point gives Re eps < 0 and Re mu < 0 over half of the band [" + fmt(targets.neg_band.lo) +
              ", " + fmt(targets.neg_band.hi) + "]; best negative-eps coverage " + fmt(best_eps) +
              ", best negative-mu coverage " + fmt(best_mu));
  }

  Candidate current = *best;
  result.trace.push_back(current.loss.total);

  const auto axis_step = [](const SearchRange& r) {
    return (r.lo == r.hi || r.points < 2) ? 0.0 : std::log10(r.hi / r.lo) / static_cast<double>(r.points - 1);
  };
  double step_d = axis_step(d21_range);
  double step_m = axis_step(mu42_range);

  for (std::size_t pass = 0; pass < options.max_refinements; ++pass) {
    if (std::max(step_d, step_m) < options.min_step_decades) break;
    const double ld = std::log10(current.d21);
    const double lm = std::log10(current.mu42);
    std::vector<std::pair<double, double>> moves;
    auto push = [&](double d, double m) {
      d = std::clamp(d, d21_range.lo, d21_range.hi);
      m = std::clamp(m, mu42_range.lo, mu42_range.hi);
      if (d == current.d21 && m == current.mu42) return;
      moves.emplace_back(d, m);
    };
    if (step_d > 0.0) {
      push(std::pow(10.0, ld + step_d), current.mu42);
      push(std::pow(10.0, ld - step_d), current.mu42);
    }
    if (step_m > 0.0) {
      push(current.d21, std::pow(10.0, lm + step_m));
      push(current.d21, std::pow(10.0, lm - step_m));
    }
    std::vector<Candidate> trial(moves.size());
    detail::parallel_for(moves.size(), options.exec.threads,
                         [&](std::size_t i) { trial[i] = evaluate(moves[i].first, moves[i].second); });
    result.evaluations += trial.size();

    const Candidate* pick = nullptr;
    for (const Candidate& c : trial) {
      if (c.loss.total < current.loss.total && (pick == nullptr || better(c, *pick))) pick = &c;
    }
    if (pick != nullptr) {
      current = *pick;
    } else {
      step_d *= 0.5;
      step_m *= 0.5;
    }
    result.trace.push_back(current.loss.total);
  }

  result.d21 = current.d21;
  result.mu42 = current.mu42;
  result.score = current.loss.total;
  result.breakdown = current.loss;
  return result;
}

}  // namespace lhm
