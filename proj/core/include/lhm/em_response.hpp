#pragma once

#include <complex>
#include <string_view>

#include "lhm/params.hpp"

namespace lhm {

using cplx = std::complex<double>;

// CODATA 2018 values (SI). c, hbar exact by definition; eps0 and mu0 carry the
// 2018 recommended digits.
struct PhysicalConstants {
  double eps0 = 8.8541878128e-12;     // F/m
  double mu0 = 1.25663706212e-6;      // N/A^2
  double c = 299792458.0;             // m/s
  double hbar = 1.054571817e-34;      // J s
  double bohr_magneton = 9.2740100783e-24;  // J/T

  bool operator==(const PhysicalConstants&) const = default;
};

struct MediumParams {
  double density_n = 0.25e24;  // atoms per m^3
  double d21 = 2.0e-29;        // electric dipole |d21|, C m
  double mu42 = 9.2740100783e-24;  // magnetic dipole |mu42|, J/T (one Bohr magneton)
  PhysicalConstants constants{};

  // density_n, d21, mu42 strictly positive and finite.
  void validate() const;

  bool operator==(const MediumParams&) const = default;
};

enum class Branch {
  Paper,     // n = -sqrt(eps mu) everywhere
  Physical,  // negative root only where Re eps < 0 and Re mu < 0
};

std::string_view branch_name(Branch branch) noexcept;
Branch parse_branch(std::string_view text);

struct MediumResponse {
  cplx gamma_e;  // electric polarizability volume, m^3
  cplx gamma_m;  // magnetic polarizability volume, m^3
  cplx chi_e;
  cplx eps_r;    // 1 + chi_e
  cplx mu_r;
  cplx n;
  double delta1 = 0.0;  // units of gamma

  bool operator==(const MediumResponse&) const = default;
};

// Local-field pole guard: |1 - N gamma / 3| must exceed this.
inline constexpr double kPoleGuard = 1e-14;

// The polarizabilities are the single point where solver quantities (units
// of gamma) meet SI: the probe Rabi frequency becomes omega1 * gamma_scale in
// s^-1 here.
//
// 2 d21^2 rho12 / (eps0 hbar Omega_p). Throws ZeroProbe when omega1 == 0.
cplx electric_polarizability(cplx rho12, double omega1, const MediumParams& medium, double gamma_scale);

// 2 mu0 mu42 rho24 / B_p with B_p = E_p / c and E_p = hbar Omega_p / d21.
// N gamma_m is dimensionless: mu0 [T m/A] * mu42 [A m^2] / B_p [T] = m^3.
cplx magnetic_polarizability(cplx rho24, double omega1, const MediumParams& medium, double gamma_scale);

// Clausius-Mossotti: chi_e = N gamma_e / (1 - N gamma_e / 3).
cplx susceptibility_e(cplx gamma_e, double density_n);

// mu_r = (1 + 2/3 N gamma_m) / (1 - 1/3 N gamma_m).
cplx permeability(cplx gamma_m, double density_n);

// Inverse of permeability(): gamma_m = (1/N) (mu_r - 1) / (2/3 + mu_r / 3).
// Throws LocalFieldPole at mu_r = -2.
cplx magnetic_polarizability_from_permeability(cplx mu_r, double density_n);

// Negated principal root by default; see Branch.
cplx refractive_index(cplx eps_r, cplx mu_r, Branch branch = Branch::Paper);

// Compose the maps above from steady-state coherences.
MediumResponse response_from_coherences(cplx rho12, cplx rho24, const SystemParams& params,
                                        const MediumParams& medium, Branch branch = Branch::Paper);

// Steady-state solve at params.delta1 followed by response_from_coherences.
MediumResponse respond(const SystemParams& params, const MediumParams& medium,
                       Branch branch = Branch::Paper);

}  // namespace lhm
