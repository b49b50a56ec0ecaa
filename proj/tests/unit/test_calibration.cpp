#include <cmath>

#include "doctest.h"
#include "lhm/calibration.hpp"
#include "lhm/config.hpp"
#include "lhm/errors.hpp"

using namespace lhm;

namespace {

SweepSpec fig2_spec(std::size_t points) {
  SweepSpec s = parse_config(*bundled_preset("fig2.cfg")).sweep_spec();
  s.points = points;
  return s;
}

SearchRange around(double center, double decades, std::size_t points) {
  return {center * std::pow(10.0, -decades), center * std::pow(10.0, decades), points};
}

}  // namespace

TEST_CASE("log grid") {
  const SearchRange r{1e-3, 1e-1, 3};
  const auto g = r.grid();
  REQUIRE(g.size() == 3);
  CHECK(g[0] == 1e-3);
  CHECK(g[1] == doctest::Approx(1e-2).epsilon(1e-14).scale(0));
  CHECK(g[2] == 1e-1);
  CHECK(SearchRange{2.0, 2.0, 9}.grid() == std::vector<double>{2.0});
  CHECK_THROWS_AS(SearchRange({0.0, 1.0, 3}).validate("x"), Error);
  CHECK_THROWS_AS(SearchRange({2.0, 1.0, 3}).validate("x"), Error);
}

TEST_CASE("targets built from a forward run score zero on that run") {
  SweepSpec s = fig2_spec(601);
  const ResponseCurve c = sweep(s);
  const FeatureReport rep = extract_features(c);
  const CalibrationTargets t = CalibrationTargets::from_report(rep, {-100.0, 100.0});
  const LossBreakdown l = calibration_loss(c, t);
  CHECK(l.total == 0.0);
  CHECK(l.eps_band_fraction == 1.0);
  CHECK(l.mu_band_fraction == 1.0);
}

TEST_CASE("peak term is the squared relative error") {
  const ResponseCurve c = sweep(fig2_spec(601));
  CalibrationTargets t = CalibrationTargets::figure2();
  const FeatureReport rep = extract_features(c);
  const LossBreakdown l = calibration_loss(c, t);
  const double rel = (rep.abs_peak->im_n - t.peak_value) / t.peak_value;
  CHECK(l.peak_value == doctest::Approx(rel * rel).epsilon(1e-12).scale(0));
  CHECK(l.flank_structure == 0.0);
}

TEST_CASE("calibration recovers the moments behind synthetic targets") {
  SweepSpec s = fig2_spec(601);
  const double d_true = 1.4e-29;
  const double m_true = 1.1e-22;
  s.medium.d21 = d_true;
  s.medium.mu42 = m_true;
  const CalibrationTargets t = CalibrationTargets::from_report(extract_features(sweep(s)), {-100.0, 100.0});
  const CalibrationResult r = calibrate_dipoles(t, s, around(d_true, 0.5, 11), around(m_true, 0.5, 11));
  const double grid_step = 0.1;  // decades
  CHECK(std::abs(std::log10(r.d21 / d_true)) <= grid_step);
  CHECK(std::abs(std::log10(r.mu42 / m_true)) <= grid_step);
  CHECK(r.score <= 1e-12);
}

TEST_CASE("collapsed range returns the single point and its score") {
  const SweepSpec s = fig2_spec(301);
  const CalibrationTargets t = CalibrationTargets::figure2();
  const CalibrationResult r = calibrate_dipoles(t, s, {1.3e-29, 1.3e-29, 5}, {1e-22, 1e-22, 5});
  CHECK(r.d21 == 1.3e-29);
  CHECK(r.mu42 == 1e-22);
  CHECK(r.evaluations == 1);
  SweepSpec at = s;
  at.medium.d21 = 1.3e-29;
  at.medium.mu42 = 1e-22;
  CHECK(r.score == calibration_loss(sweep(at), t).total);
}

TEST_CASE("score never increases across refinement passes") {
  const SweepSpec s = fig2_spec(1501);
  const MediumParams defaults;
  const CalibrationResult r = calibrate_dipoles(CalibrationTargets::figure2(), s, around(defaults.d21, 0.5, 11),
                                                around(defaults.mu42, 0.5, 11));
  REQUIRE(r.trace.size() >= 2);
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1]);
  CHECK(r.trace.back() == r.score);
}

TEST_CASE("calibration is deterministic and thread independent") {
  const SweepSpec s = fig2_spec(601);
  const auto t = CalibrationTargets::figure2();
  const SearchRange d{1e-30, 1e-28, 9}, m{1e-24, 1e-21, 9};
  CalibrationOptions one;
  one.exec.threads = 1;
  CalibrationOptions many;
  many.exec.threads = 4;
  const CalibrationResult a = calibrate_dipoles(t, s, d, m, one);
  const CalibrationResult b = calibrate_dipoles(t, s, d, m, many);
  const CalibrationResult c = calibrate_dipoles(t, s, d, m, one);
  CHECK(a.d21 == b.d21);
  CHECK(a.mu42 == b.mu42);
  CHECK(a.score == b.score);
  CHECK(a.trace == c.trace);
}

TEST_CASE("ties go to the smallest moments") {
  const SweepSpec s = fig2_spec(301);
  CalibrationTargets t = CalibrationTargets::figure2();
  t.weights = LossWeights{0, 0, 0, 0, 0, 0, 0, 0, 0};
  const CalibrationResult r = calibrate_dipoles(t, s, {1.2e-29, 1.6e-29, 5}, {0.8e-22, 1.2e-22, 5});
  CHECK(r.d21 == 1.2e-29);
  CHECK(r.mu42 == 0.8e-22);
  CHECK(r.score == 0.0);
}

TEST_CASE("no feasible point is reported with diagnostics") {
  const SweepSpec s = fig2_spec(301);
  try {
    calibrate_dipoles(CalibrationTargets::figure2(), s, {1e-33, 1e-32, 3}, {1e-27, 1e-26, 3});
    FAIL("expected NoFeasiblePoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoFeasiblePoint);
    CHECK(std::string(e.what()).find("coverage") != std::string::npos);
  }
}

TEST_CASE("target validation") {
  CalibrationTargets t = CalibrationTargets::figure3();
  t.gain_minima = {-0.3};
  CHECK_THROWS_AS(t.validate(), Error);
  t = CalibrationTargets::figure2();
  t.peak_value = 0.0;
  CHECK_THROWS_AS(t.validate(), Error);
  CHECK_NOTHROW(CalibrationTargets::figure3().validate());
  CHECK_THROWS_AS(CalibrationTargets::from_report(FeatureReport{}, {-1.0, 1.0}), Error);
}
