#include "lhm/lindblad.hpp"

namespace lhm {

HamiltonianMatrix build_hamiltonian(const SystemParams& p) {
  const cplx coupling = std::polar(p.omega3, p.phi3);
  HamiltonianMatrix out;
  Matrix4& h = out.h;
  h(0, 0) = p.delta1 + p.delta2;
  h(1, 1) = p.delta2;
  h(2, 2) = 0.0;
  h(3, 3) = p.delta4 + p.delta2;
  h(0, 1) = -p.omega1;
  h(1, 0) = -p.omega1;
  h(1, 2) = -p.omega2;
  h(2, 1) = -p.omega2;
  h(0, 3) = -coupling;
  h(3, 0) = -std::conj(coupling);
  return out;
}

Matrix4 rhs(const Matrix4& r, const SystemParams& p) {
  constexpr cplx I{0.0, 1.0};
  const cplx w = std::polar(p.omega3, p.phi3);
  const cplx wc = std::conj(w);
  const double o1 = p.omega1;
  const double o2 = p.omega2;
  const double g1 = p.gamma1;
  const double g2 = p.gamma2;
  const double g4 = p.gamma4;
  const double d1 = p.delta1;
  const double d2 = p.delta2;
  const double d4 = p.delta4;

  Matrix4 d;

  // Populations.
  const cplx exchange14 = I * (wc * r(0, 3) - w * r(3, 0));
  d(0, 0) = -2.0 * g1 * r(0, 0) - I * o1 * (r(0, 1) - r(1, 0)) - exchange14;
  d(2, 2) = 2.0 * g2 * r(1, 1) + I * o2 * (r(1, 2) - r(2, 1));
  d(3, 3) = -2.0 * g4 * r(3, 3) + exchange14;
  d(1, 1) = -(d(0, 0) + d(2, 2) + d(3, 3));

  // rho_12 / rho_21
  d(0, 1) = -(g1 + g2 + I * d1) * r(0, 1) - I * o1 * r(0, 0) - I * o2 * r(0, 2) +
            I * o1 * r(1, 1) + I * w * r(3, 1);
  d(1, 0) = -(g1 + g2 - I * d1) * r(1, 0) + I * o1 * r(0, 0) + I * o2 * r(2, 0) -
            I * o1 * r(1, 1) - I * wc * r(1, 3);

  // rho_13 / rho_31
  d(0, 2) = -(g1 + I * (d1 + d2)) * r(0, 2) - I * o2 * r(0, 1) + I * o1 * r(1, 2) +
            I * w * r(3, 2);
  d(2, 0) = -(g1 - I * (d1 + d2)) * r(2, 0) + I * o2 * r(1, 0) - I * o1 * r(2, 1) -
            I * wc * r(2, 3);

  // rho_14 / rho_41
  d(0, 3) = -(g1 + g4 + I * (d1 - d4)) * r(0, 3) + I * o1 * r(1, 3) -
            I * w * (r(0, 0) - r(3, 3));
  d(3, 0) = -(g1 + g4 - I * (d1 - d4)) * r(3, 0) - I * o1 * r(3, 1) +
            I * wc * (r(0, 0) - r(3, 3));

  // rho_23 / rho_32
  d(1, 2) = -(g2 + I * d2) * r(1, 2) + I * o1 * r(0, 2) - I * o2 * r(1, 1) + I * o2 * r(2, 2);
  d(2, 1) = -(g2 - I * d2) * r(2, 1) - I * o1 * r(2, 0) + I * o2 * r(1, 1) - I * o2 * r(2, 2);

  // rho_24 / rho_42
  d(1, 3) = -(g2 + g4 - I * d4) * r(1, 3) + I * o1 * r(0, 3) + I * o2 * r(2, 3) -
            I * w * r(1, 0);
  d(3, 1) = -(g2 + g4 + I * d4) * r(3, 1) - I * o1 * r(3, 0) - I * o2 * r(3, 2) +
            I * wc * r(0, 1);

  // rho_34 / rho_43
  d(2, 3) = -(g4 - I * (d2 + d4)) * r(2, 3) + I * o2 * r(1, 3) - I * w * r(2, 0);
  d(3, 2) = -(g4 + I * (d2 + d4)) * r(3, 2) - I * o2 * r(3, 1) + I * wc * r(0, 2);

  return d;
}

}  // namespace lhm
