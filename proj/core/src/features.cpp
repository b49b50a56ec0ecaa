#include "lhm/features.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lhm {

namespace {

using Accessor = std::function<std::optional<double>(const FeatureSample&)>;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Run {
  std::size_t first;
  std::size_t last;
};

// Maximal runs of consecutive defined samples where pred holds, keeping only
// runs of at least two samples.
std::vector<Run> find_runs(const std::vector<FeatureSample>& s, const Accessor& get,
                           const std::function<bool(double)>& pred) {
  std::vector<Run> runs;
  std::size_t start = kNone;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    bool in = false;
    if (i < s.size()) {
      const auto v = get(s[i]);
      in = v.has_value() && pred(*v);
    }
    if (in && start == kNone) start = i;
    if (!in && start != kNone) {
      if (i - start >= 2) runs.push_back({start, i - 1});
      start = kNone;
    }
  }
  return runs;
}

// Crossing between an outside sample and the inside sample at `inside`.
// level_for(outside value) picks the threshold that was crossed.
double boundary(const std::vector<FeatureSample>& s, const Accessor& get, std::size_t inside,
                std::size_t outside, const std::function<double(double)>& level_for) {
  const double x_in = s[inside].delta1;
  if (outside == kNone) return x_in;
  const auto v_out = get(s[outside]);
  const auto v_in = get(s[inside]);
  if (!v_out || !v_in) return x_in;
  const double level = level_for(*v_out);
  const double dv = *v_in - *v_out;
  if (dv == 0.0) return x_in;
  const double t = std::clamp((level - *v_out) / dv, 0.0, 1.0);
  const double x_out = s[outside].delta1;
  return x_out + t * (x_in - x_out);
}

std::vector<Interval> intervals(const std::vector<FeatureSample>& s, const Accessor& get,
                                const std::function<bool(double)>& pred,
                                const std::function<double(double)>& level_for) {
  std::vector<Interval> out;
  for (const Run& r : find_runs(s, get, pred)) {
    const std::size_t before = r.first > 0 ? r.first - 1 : kNone;
    const std::size_t after = r.last + 1 < s.size() ? r.last + 1 : kNone;
    out.push_back({boundary(s, get, r.first, before, level_for), boundary(s, get, r.last, after, level_for)});
  }
  return out;
}

}  // namespace

FeatureReport extract_features(const std::vector<FeatureSample>& s, double tol_abs) {
  if (!(tol_abs > 0.0)) raise(ErrorKind::ValidationError, "tol_abs must be > 0");
  const Accessor im_n = [](const FeatureSample& p) { return p.im_n; };
  const Accessor re_eps = [](const FeatureSample& p) { return p.re_eps; };
  const Accessor re_mu = [](const FeatureSample& p) { return p.re_mu; };
  const Accessor re_n = [](const FeatureSample& p) { return p.re_n; };

  FeatureReport report;
  report.tol_abs = tol_abs;

  std::optional<std::size_t> argmax;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].im_n) continue;
    if (!argmax || *s[i].im_n > *s[*argmax].im_n) argmax = i;
  }
  if (!argmax) raise(ErrorKind::AllUndefined, "curve has no defined points");
  if (*s[*argmax].im_n > tol_abs) report.abs_peak = AbsorptionPeak{s[*argmax].delta1, *s[*argmax].im_n};

  const auto tol = tol_abs;
  report.zero_abs_intervals = intervals(
      s, im_n, [tol](double v) { return std::abs(v) <= tol; },
      [tol](double outside) { return outside > 0.0 ? tol : -tol; });

  for (const Interval& iv : intervals(
           s, im_n, [tol](double v) { return v < -tol; }, [tol](double) { return -tol; })) {
    GainInterval g{iv.lo, iv.hi, 0.0, 0.0};
    bool first = true;
    for (const auto& p : s) {
      if (!p.im_n || p.delta1 < iv.lo || p.delta1 > iv.hi) continue;
      if (first || *p.im_n < g.minimum) {
        g.minimum = *p.im_n;
        g.delta1_at_min = p.delta1;
        first = false;
      }
    }
    report.gain_intervals.push_back(g);
  }

  const auto negative = [](double v) { return v < 0.0; };
  const auto zero_level = [](double) { return 0.0; };
  report.neg_eps_intervals = intervals(s, re_eps, negative, zero_level);
  report.neg_mu_intervals = intervals(s, re_mu, negative, zero_level);
  report.neg_re_n_intervals = intervals(s, re_n, negative, zero_level);
  return report;
}

FeatureReport extract_features(const ResponseCurve& curve, double tol_abs) {
  std::vector<FeatureSample> samples;
  samples.reserve(curve.points.size());
  for (const CurvePoint& p : curve.points) {
    FeatureSample s{p.delta1, {}, {}, {}, {}};
    if (p.response) {
      s.im_n = p.response->n.imag();
      s.re_eps = p.response->eps_r.real();
      s.re_mu = p.response->mu_r.real();
      s.re_n = p.response->n.real();
    }
    samples.push_back(s);
  }
  return extract_features(samples, tol_abs);
}

}  // namespace lhm
