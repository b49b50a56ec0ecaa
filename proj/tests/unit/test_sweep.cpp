#include <cmath>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "lhm/config.hpp"
#include "lhm/errors.hpp"
#include "lhm/sweep.hpp"

using namespace lhm;

namespace {

SweepSpec preset_spec(const char* name) { return parse_config(*bundled_preset(name)).sweep_spec(); }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("grid is uniform and ends exactly on the bounds") {
  SweepSpec s;
  s.delta1_min = -1.0;
  s.delta1_max = 2.0;
  s.points = 7;
  const auto g = s.grid();
  REQUIRE(g.size() == 7);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 2.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] - g[i - 1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("two-point sweep covers the endpoints") {
  SweepSpec s = preset_spec("fig2.cfg");
  s.points = 2;
  const ResponseCurve c = sweep(s);
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].delta1 == s.delta1_min);
  CHECK(c.points[1].delta1 == s.delta1_max);
  CHECK(c.points[0].defined());
}

TEST_CASE("spec validation") {
  SweepSpec s = preset_spec("fig2.cfg");
  s.points = 1;
  CHECK(kind_of([&] { sweep(s); }) == ErrorKind::ValidationError);
  s.points = 11;
  s.delta1_max = s.delta1_min;
  CHECK(kind_of([&] { sweep(s); }) == ErrorKind::ValidationError);
  s = preset_spec("fig2.cfg");
  s.points = 2'000'000;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::ValidationError);
  CHECK_NOTHROW(s.validate(3'000'000));
}

TEST_CASE("thread count never changes the curve") {
  SweepSpec s = preset_spec("fig3.cfg");
  s.points = 401;
  const ResponseCurve one = sweep(s, {1});
  CHECK(one == sweep(s, {3}));
  CHECK(one == sweep(s, {8}));
  CHECK(one == sweep(s));
  for (std::size_t i = 1; i < one.points.size(); ++i) CHECK(one.points[i].delta1 > one.points[i - 1].delta1);
}

TEST_CASE("points match respond() one by one") {
  SweepSpec s = preset_spec("fig2.cfg");
  s.points = 31;
  const ResponseCurve c = sweep(s);
  for (const CurvePoint& pt : c.points) {
    SystemParams p = s.params;
    p.delta1 = pt.delta1;
    REQUIRE(pt.defined());
    CHECK(*pt.response == respond(p, s.medium, s.branch));
  }
}

TEST_CASE("failing points become undefined markers") {
  SweepSpec s = preset_spec("fig2.cfg");
  s.points = 5;
  s.params.omega1 = 0.0;
  const ResponseCurve c = sweep(s);
  REQUIRE(c.points.size() == 5);
  for (const CurvePoint& pt : c.points) {
    CHECK_FALSE(pt.defined());
    REQUIRE(pt.error.has_value());
    CHECK(*pt.error == ErrorKind::ZeroProbe);
  }
}

TEST_CASE("fig2 preset is left-handed across the central band") {
  const ResponseCurve c = sweep(preset_spec("fig2.cfg"));
  REQUIRE(c.points.size() == 3001);
  for (const CurvePoint& pt : c.points) {
    if (std::abs(pt.delta1) > 100.0) continue;
    REQUIRE(pt.defined());
    CHECK(pt.response->eps_r.real() < 0.0);
    CHECK(pt.response->mu_r.real() < 0.0);
  }
}

TEST_CASE("paper branch keeps Re n non-positive, physical branch follows the signs") {
  SweepSpec s = preset_spec("fig3.cfg");
  s.points = 601;
  for (const CurvePoint& pt : sweep(s).points) CHECK(pt.response->n.real() <= 0.0);
  s.branch = Branch::Physical;
  for (const CurvePoint& pt : sweep(s).points) {
    const auto& r = *pt.response;
    if (r.eps_r.real() < 0.0 && r.mu_r.real() < 0.0)
      CHECK(r.n.real() <= 0.0);
    else
      CHECK(r.n.real() >= 0.0);
  }
}

TEST_CASE("phase scan") {
  const RunConfig cfg = parse_config(*bundled_preset("fig2.cfg"));
  const double phi = cfg.system.phi3;
  const std::vector<double> phases{phi, phi + 2.0 * std::numbers::pi};
  const auto pts = phase_scan(cfg.system, cfg.medium, phases, 6.0);
  REQUIRE(pts.size() == 2);
  const cplx a = pts[0].response->n;
  const cplx b = pts[1].response->n;
  CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  CHECK(std::abs(pts[0].response->eps_r - pts[1].response->eps_r) <= 1e-12 * std::abs(pts[0].response->eps_r));

  SystemParams p = cfg.system;
  p.delta1 = 6.0;
  const std::vector<double> single{phi};
  CHECK(*phase_scan(cfg.system, cfg.medium, single, 6.0).front().response == respond(p, cfg.medium));
  CHECK(kind_of([&] { phase_scan(cfg.system, cfg.medium, std::vector<double>{}, 0.0); }) ==
        ErrorKind::ValidationError);
}

TEST_CASE("stronger coupling at the second phase raises resonant absorption") {
  const RunConfig f2 = parse_config(*bundled_preset("fig2.cfg"));
  const RunConfig f3 = parse_config(*bundled_preset("fig3.cfg"));
  SystemParams a = f2.system, b = f3.system;
  a.delta1 = b.delta1 = 0.0;
  CHECK(respond(b, f2.medium).n.imag() > respond(a, f2.medium).n.imag());
}

TEST_CASE("thread setting from the environment") {
  ::setenv("LHM_SIM_THREADS", "3", 1);
  CHECK(threads_from_environment() == 3);
  ::setenv("LHM_SIM_THREADS", "x", 1);
  CHECK(threads_from_environment() == 0);
  ::setenv("LHM_SIM_THREADS", "", 1);
  CHECK(threads_from_environment() == 0);
  ::unsetenv("LHM_SIM_THREADS");
  CHECK(threads_from_environment() == 0);
  CHECK(detail::resolve_threads(0, 1) == 1);
  CHECK(detail::resolve_threads(4, 2) == 2);
}
