#include "lhm/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "lhm/errors.hpp"
#include "lhm/lindblad.hpp"

namespace lhm {

namespace {

Matrix4 unflatten(const linalg::Vector<16>& v) {
  Matrix4 m;
  std::copy(v.begin(), v.end(), m.flat().begin());
  return m;
}

Matrix4 symmetrize(const Matrix4& m) { return 0.5 * (m + m.adjoint()); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::string_view solve_method_name(SolveMethod method) noexcept {
  return method == SolveMethod::LinearSolve ? "linear-solve" : "time-integration";
}

Liouvillian assemble_liouvillian(const SystemParams& params) {
  Liouvillian l;
  for (std::size_t k = 0; k < 16; ++k) {
    Matrix4 unit;
    unit.flat()[k] = 1.0;
    const Matrix4 col = rhs(unit, params);
    for (std::size_t r = 0; r < 16; ++r) l(r, k) = col.flat()[r];
  }
  return l;
}

ConstrainedSystem constrained_system(const SystemParams& params) {
  ConstrainedSystem sys{assemble_liouvillian(params), {}};
  for (std::size_t c = 0; c < 16; ++c) sys.matrix(kTraceRow, c) = 0.0;
  for (std::size_t i = 0; i < 4; ++i) sys.matrix(kTraceRow, 5 * i) = 1.0;
  sys.rhs[kTraceRow] = 1.0;
  return sys;
}

SteadyStateResult steady_state_linear(const SystemParams& params, const LinearSolveOptions& options) {
  params.validate_finite();
  const ConstrainedSystem sys = constrained_system(params);
  const linalg::LuDecomposition<16> lu(sys.matrix);
  const double rcond = lu.reciprocal_condition();
  if (lu.singular() || !(rcond >= options.min_reciprocal_condition)) {
    raise(ErrorKind::SingularLiouvillian,
          "constrained Liouvillian is rank-deficient (reciprocal condition estimate " +
              fmt_double(rcond) + ")");
  }

  linalg::Vector<16> x = lu.solve(sys.rhs);
  // One step of iterative refinement.
  const linalg::Vector<16> ax = sys.matrix * x;
  linalg::Vector<16> r{};
  for (std::size_t i = 0; i < 16; ++i) r[i] = sys.rhs[i] - ax[i];
  const linalg::Vector<16> dx = lu.solve(r);
  for (std::size_t i = 0; i < 16; ++i) x[i] += dx[i];

  const Matrix4 rho = symmetrize(unflatten(x));
  const double residual = rhs(rho, params).max_abs();
  if (!(residual <= options.residual_tol)) {
    raise(ErrorKind::SingularLiouvillian,
          "steady-state residual " + fmt_double(residual) + " exceeds tolerance " +
              fmt_double(options.residual_tol) + " (reciprocal condition " + fmt_double(rcond) + ")");
  }

  SteadyStateResult out{DensityMatrix(rho)};
  out.residual = residual;
  out.method = SolveMethod::LinearSolve;
  out.converged = true;
  out.reciprocal_condition = rcond;
  return out;
}

void IntegratorConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) raise(ErrorKind::ValidationError, "integrator step must be > 0");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    raise(ErrorKind::ValidationError, "integrator horizon must be > 0");
  if (!(step < horizon)) raise(ErrorKind::ValidationError, "integrator step must be smaller than horizon");
  if (!(convergence_tol > 0.0)) raise(ErrorKind::ValidationError, "convergence_tol must be > 0");
}

double IntegratorConfig::stable_step(const SystemParams& p) {
  const double rate = std::abs(p.delta1) + std::abs(p.delta2) + std::abs(p.delta4) +
                      2.0 * (p.omega1 + p.omega2 + p.omega3) + 2.0 * (p.gamma1 + p.gamma2 + p.gamma4);
  return 1.0 / std::max(rate, 1.0);
}

IntegratorConfig IntegratorConfig::for_params(const SystemParams& params) {
  IntegratorConfig cfg;
  cfg.step = stable_step(params);
  return cfg;
}

SteadyStateResult steady_state_integrate(const SystemParams& params, const DensityMatrix& init,
                                         const IntegratorConfig& config) {
  params.validate_finite();
  config.validate();

  const double h = config.step;
  const double half = 0.5 * h;
  const double sixth = h / 6.0;
  const auto max_steps = static_cast<std::size_t>(std::ceil(config.horizon / h));

  Matrix4 rho = init.matrix();
  double max_drift = 0.0;
  bool converged = false;
  std::size_t n = 0;
  while (n < max_steps) {
    const Matrix4 k1 = rhs(rho, params);
    const Matrix4 k2 = rhs(rho + half * k1, params);
    const Matrix4 k3 = rhs(rho + half * k2, params);
    const Matrix4 k4 = rhs(rho + h * k3, params);
    Matrix4 delta = k2 + k3;
    delta *= 2.0;
    delta += k1;
    delta += k4;
    delta *= sixth;
    rho += delta;
    ++n;

    const double norm = rho.max_abs();
    const cplx tr = rho.trace();
    if (!std::isfinite(norm) || norm > 10.0 || std::abs(tr) > 10.0) {
      raise(ErrorKind::UnstableStep, "state diverged at t = " + fmt_double(static_cast<double>(n) * h) +
                                         " (step " + fmt_double(h) + " too large?)");
    }
    max_drift = std::max(max_drift, std::abs(tr - 1.0));
    if (delta.max_abs() / h < config.convergence_tol) {
      converged = true;
      break;
    }
  }

  const Matrix4 final_rho = symmetrize(rho);
  SteadyStateResult out{DensityMatrix(final_rho)};
  out.residual = rhs(final_rho, params).max_abs();
  out.method = SolveMethod::TimeIntegration;
  out.converged = converged;
  out.final_time = static_cast<double>(n) * h;
  out.steps = n;
  out.max_trace_drift = max_drift;
  return out;
}

DensityMatrix default_initial_state() { return DensityMatrix::pure(3); }

}  // namespace lhm
