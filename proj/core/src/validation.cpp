#include "lhm/validation.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "lhm/features.hpp"
#include "lhm/lindblad.hpp"
#include "lhm/steady_state.hpp"
#include "lhm/sweep.hpp"

namespace lhm {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Matrix4 mul(const Matrix4& a, const Matrix4& b) {
  Matrix4 out = Matrix4::zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

Matrix4 jump(int to, int from, double rate) {
  Matrix4 l = Matrix4::zero();
  l(to - 1, from - 1) = std::sqrt(rate);
  return l;
}

SystemParams scaled(SystemParams p, double f) {
  for (double* v : {&p.omega1, &p.omega2, &p.omega3, &p.delta1, &p.delta2, &p.delta4, &p.gamma1, &p.gamma2,
                    &p.gamma4})
    *v *= f;
  return p;
}

class Suite {
 public:
  void check(std::string name, const std::function<std::string(bool&)>& body) {
    CheckResult r;
    r.name = std::move(name);
    try {
      bool ok = false;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }
  ValidationReport report;
};

}  // namespace

std::size_t ValidationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 1 : 0;
  return n;
}

std::size_t ValidationReport::failed() const { return checks.size() - passed(); }

DensityMatrix random_density_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix4 a;
  for (auto& z : a.flat()) z = cplx(g(rng), g(rng));
  Matrix4 rho = mul(a, a.adjoint());
  const double tr = rho.trace().real();
  for (auto& z : rho.flat()) z /= tr;
  rho = (rho + rho.adjoint()) * cplx(0.5);
  // pin the trace exactly
  rho(0, 0) = 1.0 - rho(1, 1).real() - rho(2, 2).real() - rho(3, 3).real();
  return DensityMatrix(rho);
}

Matrix4 lindblad_reference_rhs(const Matrix4& rho, const SystemParams& p) {
  Matrix4 h = Matrix4::zero();
  h(0, 0) = p.delta1 + p.delta2;
  h(1, 1) = p.delta2;
  h(3, 3) = p.delta4 + p.delta2;
  h(0, 1) = -p.omega1;
  h(1, 2) = -p.omega2;
  h(0, 3) = -p.omega3 * std::polar(1.0, p.phi3);
  h(1, 0) = std::conj(h(0, 1));
  h(2, 1) = std::conj(h(1, 2));
  h(3, 0) = std::conj(h(0, 3));

  const cplx minus_i(0.0, -1.0);
  Matrix4 out = (mul(h, rho) - mul(rho, h)) * minus_i;
  for (const Matrix4& l : {jump(2, 1, 2.0 * p.gamma1), jump(2, 4, 2.0 * p.gamma4), jump(3, 2, 2.0 * p.gamma2)}) {
    const Matrix4 ld = l.adjoint();
    const Matrix4 ldl = mul(ld, l);
    out = out + mul(mul(l, rho), ld) - (mul(ldl, rho) + mul(rho, ldl)) * cplx(0.5);
  }
  return out;
}

ValidationReport run_validation(const SystemParams& params, const MediumParams& medium,
                                const ValidationOptions& options) {
  params.validate();
  medium.validate();
  Suite s;
  std::mt19937_64 rng(options.seed);
  std::vector<DensityMatrix> states;
  for (std::size_t i = 0; i < options.random_states; ++i) states.push_back(random_density_matrix(rng));

  s.check("rhs trace conservation", [&](bool& ok) {
    double worst = 0.0;
    for (const auto& st : states) {
      const double scale = st.matrix().max_abs();
      worst = std::max(worst, std::abs(rhs(st.matrix(), params).trace()) / scale);
    }
    ok = worst <= 1e-13;
    return fmt("max |tr rhs| / max|rho| = %.3g", worst);
  });

  s.check("rhs hermiticity", [&](bool& ok) {
    double worst = 0.0;
    for (const auto& st : states) worst = std::max(worst, rhs(st.matrix(), params).hermiticity_error());
    ok = worst <= 1e-13;
    return fmt("max |rhs - rhs^dagger| = %.3g", worst);
  });

  s.check("rhs matches generic Lindblad form", [&](bool& ok) {
    double worst = 0.0;
    for (const auto& st : states)
      worst = std::max(worst, max_abs_diff(rhs(st.matrix(), params), lindblad_reference_rhs(st.matrix(), params)));
    ok = worst <= 1e-12;
    return fmt("max deviation %.3g", worst);
  });

  s.check("rhs phase periodicity", [&](bool& ok) {
    SystemParams shifted = params;
    shifted.phi3 += 2.0 * std::numbers::pi;
    double worst = 0.0;
    for (const auto& st : states)
      worst = std::max(worst, max_abs_diff(rhs(st.matrix(), params), rhs(st.matrix(), shifted)));
    ok = worst <= 1e-13;
    return fmt("max deviation %.3g", worst);
  });

  s.check("steady residual contract", [&](bool& ok) {
    double worst = 0.0;
    for (int k = -5; k <= 5; ++k) {
      SystemParams p = params;
      p.delta1 = 20.0 * k;
      worst = std::max(worst, steady_state_linear(p).residual);
    }
    ok = worst <= 1e-10;
    return fmt("max residual %.3g over 11 detunings", worst);
  });

  s.check("no-drive fixed point", [&](bool& ok) {
    SystemParams p = params;
    p.omega1 = p.omega2 = p.omega3 = 0.0;
    const double lin = std::abs(steady_state_linear(p).rho.population(3) - 1.0);
    IntegratorConfig cfg = IntegratorConfig::for_params(p);
    cfg.convergence_tol = 1e-16;
    const double integ = std::abs(steady_state_integrate(p, DensityMatrix::pure(1), cfg).rho.population(3) - 1.0);
    ok = lin <= 1e-12 && integ <= 1e-12;
    return fmt("|rho33 - 1|: linear %.3g, integrated %.3g", lin, integ);
  });

  s.check("steady scaling invariance", [&](bool& ok) {
    const Matrix4 a = steady_state_linear(params).rho.matrix();
    const Matrix4 b = steady_state_linear(scaled(params, 3.7)).rho.matrix();
    const double d = max_abs_diff(a, b);
    ok = d <= 1e-10;
    return fmt("max deviation %.3g", d);
  });

  if (options.integration_checks) {
    s.check("linear solve vs integration", [&](bool& ok) {
      double worst = 0.0;
      double drift = 0.0;
      for (double d1 : {params.delta1, params.delta1 + 5.0}) {
        SystemParams p = params;
        p.delta1 = d1;
        const auto lin = steady_state_linear(p);
        const auto integ = steady_state_integrate(p, default_initial_state(), IntegratorConfig::for_params(p));
        worst = std::max(worst, max_abs_diff(lin.rho.matrix(), integ.rho.matrix()));
        drift = std::max(drift, integ.max_trace_drift);
      }
      ok = worst <= 1e-7 && drift <= 1e-10;
      return fmt("max deviation %.3g, trace drift %.3g", worst, drift);
    });
  }

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double n = medium.density_n;

  s.check("Clausius-Mossotti roundtrip", [&](bool& ok) {
    double worst = 0.0;
    std::size_t used = 0;
    while (used < 1000) {
      // N gamma_m kept away from the pole at 3
      const cplx x(4.0 * u(rng), 4.0 * u(rng));
      if (std::abs(x - 3.0) < 0.1) continue;
      const cplx gm = x / n;
      const cplx back = magnetic_polarizability_from_permeability(permeability(gm, n), n);
      worst = std::max(worst, std::abs(back - gm) / std::abs(gm));
      ++used;
    }
    ok = worst <= 1e-12;
    return fmt("max relative error %.3g", worst);
  });

  s.check("response maps conjugation symmetry", [&](bool& ok) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const cplx x(4.0 * u(rng), 4.0 * u(rng));
      if (std::abs(x - 3.0) < 0.1) continue;
      const cplx g = x / n;
      worst = std::max(worst, std::abs(susceptibility_e(std::conj(g), n) - std::conj(susceptibility_e(g, n))));
      worst = std::max(worst, std::abs(permeability(std::conj(g), n) - std::conj(permeability(g, n))));
    }
    ok = worst == 0.0;
    return fmt("max deviation %.3g", worst);
  });

  const ResponseCurve curve = [&] {
    SweepSpec spec;
    spec.params = params;
    spec.medium = medium;
    spec.points = 301;
    return sweep(spec);
  }();

  s.check("eps_r = 1 + chi_e", [&](bool& ok) {
    std::size_t bad = 0;
    for (const auto& p : curve.points)
      if (p.response && p.response->eps_r - 1.0 - p.response->chi_e != cplx(0.0)) ++bad;
    ok = bad == 0;
    return fmt("%.0f mismatching points", static_cast<double>(bad));
  });

  s.check("paper branch Re n <= 0", [&](bool& ok) {
    std::size_t bad = 0;
    for (const auto& p : curve.points)
      if (p.response && p.response->n.real() > 0.0) ++bad;
    ok = bad == 0;
    return fmt("%.0f points with Re n > 0", static_cast<double>(bad));
  });

  s.check("dilute limit", [&](bool& ok) {
    MediumParams dilute = medium;
    dilute.density_n *= 1e-6;
    const MediumResponse r = respond(params, dilute);
    const double rel = std::abs(r.chi_e - dilute.density_n * r.gamma_e) / std::abs(r.chi_e);
    ok = rel <= 1e-5;
    return fmt("|chi - N gamma_e| / |chi| = %.3g", rel);
  });

  s.check("Gaussian threshold oracle", [&](bool& ok) {
    std::vector<FeatureSample> g;
    const std::size_t pts = 3001;
    const double step = 300.0 / static_cast<double>(pts - 1);
    for (std::size_t i = 0; i < pts; ++i) {
      const double x = -150.0 + step * static_cast<double>(i);
      g.push_back({x, std::exp(-(x / 10.0) * (x / 10.0)), 1.0, 1.0, 1.0});
    }
    const FeatureReport r = extract_features(g, 0.01);
    const double edge = 10.0 * std::sqrt(std::log(100.0));
    double err = 1e300;
    if (r.zero_abs_intervals.size() == 2)
      err = std::max(std::abs(r.zero_abs_intervals[0].hi + edge), std::abs(r.zero_abs_intervals[1].lo - edge));
    ok = err <= step && r.abs_peak && std::abs(r.abs_peak->delta1) <= step;
    return fmt("boundary error %.3g, spacing %.3g", err, step);
  });

  s.check("feature extraction idempotence", [&](bool& ok) {
    ok = extract_features(curve) == extract_features(curve);
    return std::string(ok ? "identical" : "reports differ");
  });

  return s.report;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << report.passed() << " passed, " << report.failed() << " failed\n";
}

}  // namespace lhm
