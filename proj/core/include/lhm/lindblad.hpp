#pragma once

#include "lhm/matrix4.hpp"
#include "lhm/params.hpp"

namespace lhm {

// Rotating-frame Hamiltonian in units of gamma (hbar = 1). Hermitian.
struct HamiltonianMatrix {
  Matrix4 h;
};

// Diagonal (D1+D2, D2, 0, D4+D2) on levels 1..4; couplings h12 = -Omega1,
// h23 = -Omega2, h14 = -Omega3 exp(i Phi3) and their conjugates.
HamiltonianMatrix build_hamiltonian(const SystemParams& params);

// d(rho)/dt in units of gamma.
//
// The sixteen element equations are written out explicitly. They follow from
// -i[H, rho] plus the three decay channels |1>->|2> (2 gamma1), |4>->|2>
// (2 gamma4), |2>->|3> (2 gamma2). Each element is linear in rho (lower
// triangle included) so the Liouvillian can be read off column by column
// from unit inputs. d(rho_22)/dt is formed from trace closure.
//
// Sign conventions worth checking against other write-ups:
//   rho_44: coupling term -(i Omega3 rho_41 e^{+i Phi3} + c.c.)
//   rho_14: free evolution -(gamma1 + gamma4 + i(Delta1 - Delta4)) rho_14
// Nonzero Delta4 enters rho_14, rho_24 and rho_34 through their free
// evolution terms.
Matrix4 rhs(const Matrix4& rho, const SystemParams& params);

}  // namespace lhm
