#include "lhm/em_response.hpp"

#include <cmath>
#include <string>

#include "lhm/errors.hpp"
#include "lhm/steady_state.hpp"

namespace lhm {

namespace {

double probe_rate_si(double omega1, double gamma_scale) {
  if (!(omega1 > 0.0)) raise(ErrorKind::ZeroProbe, "probe Rabi frequency omega1 must be > 0");
  return omega1 * gamma_scale;
}

void check_pole(cplx denominator, const char* what) {
  if (std::abs(denominator) <= kPoleGuard) {
    raise(ErrorKind::LocalFieldPole, std::string(what) + " at the local-field pole");
  }
}

}  // namespace

void MediumParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) raise(ErrorKind::ValidationError, std::string(name) + " must be > 0");
  };
  positive(density_n, "density_n");
  positive(d21, "d21");
  positive(mu42, "mu42");
}

std::string_view branch_name(Branch branch) noexcept {
  return branch == Branch::Paper ? "paper" : "physical";
}

Branch parse_branch(std::string_view text) {
  if (text == "paper") return Branch::Paper;
  if (text == "physical") return Branch::Physical;
  raise(ErrorKind::ValidationError, "branch must be 'paper' or 'physical', got '" + std::string(text) + "'");
}

cplx electric_polarizability(cplx rho12, double omega1, const MediumParams& medium, double gamma_scale) {
  const double omega_p = probe_rate_si(omega1, gamma_scale);
  const auto& k = medium.constants;
  return 2.0 * medium.d21 * medium.d21 * rho12 / (k.eps0 * k.hbar * omega_p);
}

cplx magnetic_polarizability(cplx rho24, double omega1, const MediumParams& medium, double gamma_scale) {
  const double omega_p = probe_rate_si(omega1, gamma_scale);
  const auto& k = medium.constants;
  const double e_p = k.hbar * omega_p / medium.d21;
  const double b_p = e_p / k.c;
  return 2.0 * k.mu0 * medium.mu42 * rho24 / b_p;
}

cplx susceptibility_e(cplx gamma_e, double density_n) {
  const cplx x = density_n * gamma_e;
  const cplx denom = 1.0 - x / 3.0;
  check_pole(denom, "electric susceptibility");
  return x / denom;
}

cplx permeability(cplx gamma_m, double density_n) {
  const cplx x = density_n * gamma_m;
  const cplx denom = 1.0 - x / 3.0;
  check_pole(denom, "permeability");
  return (1.0 + 2.0 * x / 3.0) / denom;
}

cplx magnetic_polarizability_from_permeability(cplx mu_r, double density_n) {
  const cplx denom = 2.0 / 3.0 + mu_r / 3.0;
  check_pole(denom, "inverse magnetic Clausius-Mossotti");
  return (mu_r - 1.0) / denom / density_n;
}

cplx refractive_index(cplx eps_r, cplx mu_r, Branch branch) {
  const cplx s = std::sqrt(eps_r * mu_r);  // principal root, Re s >= 0
  if (branch == Branch::Physical && !(eps_r.real() < 0.0 && mu_r.real() < 0.0)) return s;
  return -s;
}

MediumResponse response_from_coherences(cplx rho12, cplx rho24, const SystemParams& params,
                                        const MediumParams& medium, Branch branch) {
  MediumResponse r;
  r.delta1 = params.delta1;
  r.gamma_e = electric_polarizability(rho12, params.omega1, medium, params.gamma_scale);
  r.gamma_m = magnetic_polarizability(rho24, params.omega1, medium, params.gamma_scale);
  r.chi_e = susceptibility_e(r.gamma_e, medium.density_n);
  r.eps_r = 1.0 + r.chi_e;
  r.mu_r = permeability(r.gamma_m, medium.density_n);
  r.n = refractive_index(r.eps_r, r.mu_r, branch);
  return r;
}

MediumResponse respond(const SystemParams& params, const MediumParams& medium, Branch branch) {
  params.validate();
  medium.validate();
  const SteadyStateResult ss = steady_state_linear(params);
  return response_from_coherences(ss.rho.at(1, 2), ss.rho.at(2, 4), params, medium, branch);
}

}  // namespace lhm
