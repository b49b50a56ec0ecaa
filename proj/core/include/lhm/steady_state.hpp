#pragma once

#include <cstddef>
#include <string_view>

#include "lhm/density_matrix.hpp"
#include "lhm/linalg.hpp"
#include "lhm/params.hpp"

namespace lhm {

enum class SolveMethod { LinearSolve, TimeIntegration };

std::string_view solve_method_name(SolveMethod method) noexcept;

struct SteadyStateResult {
  DensityMatrix rho;
  double residual = 0.0;  // max |rhs(rho)|, units of gamma
  SolveMethod method = SolveMethod::LinearSolve;
  bool converged = true;

  // Linear solve diagnostics.
  double reciprocal_condition = 0.0;

  // Integration diagnostics.
  double final_time = 0.0;
  std::size_t steps = 0;
  double max_trace_drift = 0.0;  // max |tr(rho) - 1| over all steps
};

// vec(rho) is the row-major flattening of rho; index 4*i + j holds rho_{i+1,j+1}.
using Liouvillian = linalg::Matrix<16>;

// Column k is rhs applied to the k-th unit matrix.
Liouvillian assemble_liouvillian(const SystemParams& params);

struct ConstrainedSystem {
  linalg::Matrix<16> matrix;
  linalg::Vector<16> rhs;
};

// Row of the rho_22 equation (vec index 5) replaced by sum_i rho_ii = 1.
inline constexpr std::size_t kTraceRow = 5;
ConstrainedSystem constrained_system(const SystemParams& params);

struct LinearSolveOptions {
  double residual_tol = 1e-10;
  double min_reciprocal_condition = 1e-14;
};

// Direct solve of L vec(rho) = 0 with the trace constraint. The solution is
// symmetrized, (rho + rho^dagger)/2, and its residual re-checked.
// Throws Error{SingularLiouvillian} for rank-deficient systems or when the
// residual contract cannot be met.
SteadyStateResult steady_state_linear(const SystemParams& params,
                                      const LinearSolveOptions& options = {});

struct IntegratorConfig {
  double step = 1e-3;              // 1/gamma
  double horizon = 2.0e4;          // 1/gamma
  double convergence_tol = 1e-12;  // max |d rho| per unit time

  void validate() const;

  // A step inside the RK4 stability region for these parameters, about one
  // radian of the fastest free oscillation per step. Stable but not time
  // accurate for transients; the fixed point of the RK4 map is the exact
  // steady state regardless of step size. For resolving transients use
  // step <= 0.01 / max(Omega3, Omega1, |Delta1|, 1).
  static double stable_step(const SystemParams& params);
  static IntegratorConfig for_params(const SystemParams& params);
};

// Classical fixed-step RK4 on d rho/dt = rhs(rho) until the change per unit
// time drops below convergence_tol or the horizon is reached. Reaching the
// horizon returns the last state with converged = false. Throws
// Error{UnstableStep} if any entry or the trace exceeds 10 in magnitude.
SteadyStateResult steady_state_integrate(const SystemParams& params, const DensityMatrix& init,
                                         const IntegratorConfig& config);

// Ground configuration rho_33 = 1.
DensityMatrix default_initial_state();

}  // namespace lhm
