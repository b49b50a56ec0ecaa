#include <cmath>
#include <random>

#include "doctest.h"
#include "lhm/config.hpp"
#include "lhm/em_response.hpp"
#include "lhm/errors.hpp"
#include "lhm/steady_state.hpp"

using namespace lhm;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

RunConfig preset(const char* name) { return parse_config(*bundled_preset(name)); }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("electric polarizability") {
  MediumParams m;
  m.d21 = 1.0e-29;
  CHECK(electric_polarizability(0.0, 0.8, m, 1e6) == cplx(0.0));
  const cplx one = electric_polarizability({0.1, 0.05}, 0.8, m, 1e6);
  CHECK(electric_polarizability({0.2, 0.1}, 0.8, m, 1e6) == 2.0 * one);
  // 2 d^2 rho / (eps0 hbar Omega_p), evaluated at 30 digits
  CHECK(rel(one, {2.67741146019318265e-20, 1.33870573009659133e-20}) <= 1e-14);
  CHECK(kind_of([&] { electric_polarizability(0.1, 0.0, m, 1e6); }) == ErrorKind::ZeroProbe);
}

TEST_CASE("magnetic polarizability") {
  MediumParams m;  // d21 2e-29, mu42 one Bohr magneton
  CHECK(magnetic_polarizability(0.0, 0.8, m, 1e6) == cplx(0.0));
  const cplx base = magnetic_polarizability({0.05, -0.02}, 0.8, m, 1e6);
  CHECK(rel(base, {8.28251018429103227e-23, -3.31300407371641291e-23}) <= 1e-14);
  MediumParams k = m;
  k.mu42 *= 3.0;
  CHECK(rel(magnetic_polarizability({0.05, -0.02}, 0.8, k, 1e6), 3.0 * base) <= 1e-15);
  CHECK(kind_of([&] { magnetic_polarizability(0.1, 0.0, m, 1e6); }) == ErrorKind::ZeroProbe);
  // N gamma_m is a plain number of order 10 here; m^3 times m^-3
  CHECK(std::abs(std::abs(m.density_n * base) - 22.30) <= 0.01);
}

TEST_CASE("electric susceptibility with local field") {
  const double n = 1e24;
  CHECK(susceptibility_e(0.0, n) == cplx(0.0));
  const cplx x = 3e-6;
  CHECK(rel(susceptibility_e(x / n, n), x) <= 1.1e-6);
  const double below = susceptibility_e(3.0 * (1 - 1e-6) / n, n).real();
  const double above = susceptibility_e(3.0 * (1 + 1e-6) / n, n).real();
  CHECK(below > 0.0);
  CHECK(above < 0.0);
  CHECK(kind_of([&] { susceptibility_e(3.0 / n, n); }) == ErrorKind::LocalFieldPole);
}

TEST_CASE("permeability closed forms") {
  const double n = 2e23;
  CHECK(permeability(0.0, n) == cplx(1.0));
  CHECK(std::abs(permeability(-3.0 / n, n) - cplx(-0.5)) <= 1e-15);
  CHECK(kind_of([&] { permeability(3.0 / n, n); }) == ErrorKind::LocalFieldPole);
  CHECK(kind_of([&] { magnetic_polarizability_from_permeability(-2.0, n); }) == ErrorKind::LocalFieldPole);
}

TEST_CASE("permeability inverse roundtrip") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const double n = 0.25e24;
  for (int k = 0; k < 1000; ++k) {
    const cplx x(u(rng), u(rng));
    if (std::abs(x - 3.0) < 0.05) continue;
    const cplx gm = x / n;
    CHECK(rel(magnetic_polarizability_from_permeability(permeability(gm, n), n), gm) <= 1e-12);
  }
}

TEST_CASE("conjugation symmetry") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const double n = 0.25e24;
  for (int k = 0; k < 200; ++k) {
    const cplx g(u(rng) / n, u(rng) / n);
    CHECK(susceptibility_e(std::conj(g), n) == std::conj(susceptibility_e(g, n)));
    CHECK(permeability(std::conj(g), n) == std::conj(permeability(g, n)));
  }
}

TEST_CASE("refractive index branches") {
  CHECK(refractive_index(1.0, 1.0, Branch::Physical) == cplx(1.0));
  CHECK(refractive_index(1.0, 1.0, Branch::Paper) == cplx(-1.0));
  CHECK(refractive_index(-1.0, -1.0, Branch::Paper) == cplx(-1.0));
  CHECK(refractive_index(-1.0, -1.0, Branch::Physical) == cplx(-1.0));

  const cplx eps(-2.0, 0.1), mu(-1.0, 0.05);
  const cplx prod = eps * mu;
  const double r = std::hypot(prod.real(), prod.imag());
  const double theta = std::atan2(prod.imag(), prod.real());
  const cplx polar = -std::sqrt(r) * cplx(std::cos(theta / 2), std::sin(theta / 2));
  CHECK(std::abs(refractive_index(eps, mu) - polar) <= 1e-15);
  CHECK(refractive_index(eps, mu).real() < 0.0);

  // mixed signs: physical branch keeps the principal root
  CHECK(refractive_index({2.0, 0.1}, {-1.0, 0.1}, Branch::Physical).real() >= 0.0);
}

TEST_CASE("branch names parse") {
  CHECK(parse_branch("paper") == Branch::Paper);
  CHECK(parse_branch("physical") == Branch::Physical);
  CHECK(branch_name(Branch::Physical) == "physical");
  CHECK(kind_of([] { parse_branch("left"); }) == ErrorKind::ValidationError);
}

TEST_CASE("medium validation") {
  MediumParams m;
  m.mu42 = 0.0;
  CHECK(kind_of([&] { m.validate(); }) == ErrorKind::ValidationError);
  m = MediumParams{};
  m.density_n = -1.0;
  CHECK(kind_of([&] { m.validate(); }) == ErrorKind::ValidationError);
}

TEST_CASE("without the coupling field there is no magnetic response") {
  SystemParams p = presets::figure2(2.0);
  p.omega3 = 0.0;
  p.omega2 = 0.0;
  p.omega1 = 0.01;
  const MediumResponse r = respond(p, MediumParams{});
  CHECK(std::abs(steady_state_linear(p).rho.at(2, 4)) <= 1e-15);
  CHECK(std::abs(r.mu_r - 1.0) <= 1e-12);
  CHECK(r.eps_r == 1.0 + r.chi_e);
  CHECK(r.delta1 == 2.0);
}

TEST_CASE("composition matches the individual maps") {
  const RunConfig cfg = preset("fig2.cfg");
  SystemParams p = cfg.system;
  p.delta1 = -33.0;
  const MediumResponse r = respond(p, cfg.medium);
  const DensityMatrix rho = steady_state_linear(p).rho;
  const cplx ge = electric_polarizability(rho.at(1, 2), p.omega1, cfg.medium, p.gamma_scale);
  const cplx gm = magnetic_polarizability(rho.at(2, 4), p.omega1, cfg.medium, p.gamma_scale);
  CHECK(r.gamma_e == ge);
  CHECK(r.gamma_m == gm);
  CHECK(r.chi_e == susceptibility_e(ge, cfg.medium.density_n));
  CHECK(r.mu_r == permeability(gm, cfg.medium.density_n));
  CHECK(r.n == refractive_index(r.eps_r, r.mu_r));
}

TEST_CASE("dilute medium approaches the linear susceptibility") {
  MediumParams m = preset("fig2.cfg").medium;
  m.density_n *= 1e-6;
  const MediumResponse r = respond(presets::figure2(1.0), m);
  CHECK(std::abs(r.chi_e - m.density_n * r.gamma_e) / std::abs(r.chi_e) <= 1e-5);
}

TEST_CASE("fig2 preset is left-handed and transparent at 20 gamma") {
  const RunConfig cfg = preset("fig2.cfg");
  SystemParams p = cfg.system;
  p.delta1 = 20.0;
  const MediumResponse r = respond(p, cfg.medium);
  CHECK(r.eps_r.real() < 0.0);
  CHECK(r.mu_r.real() < 0.0);
  CHECK(r.n.real() < 0.0);
  CHECK(std::abs(r.n.imag()) <= 0.05);
}

TEST_CASE("fig2 preset absorbs near resonance") {
  const RunConfig cfg = preset("fig2.cfg");
  SystemParams p = cfg.system;
  p.delta1 = -4.2;
  const double peak = respond(p, cfg.medium).n.imag();
  CHECK(std::abs(peak - 0.65) <= 0.15);
  p.delta1 = 0.0;
  const double centre = respond(p, cfg.medium).n.imag();
  CHECK(centre > 0.1);
  CHECK(centre < peak);
}
