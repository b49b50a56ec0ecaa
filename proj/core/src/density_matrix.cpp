#include "lhm/density_matrix.hpp"

#include <cmath>
#include <string>

#include "lhm/errors.hpp"

namespace lhm {

DensityMatrix::DensityMatrix(const Matrix4& rho) : rho_(rho) {
  for (const auto& z : rho_.flat()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      raise(ErrorKind::ValidationError, "density matrix has non-finite entries");
    }
  }
  const double herm = rho_.hermiticity_error();
  if (herm > kHermiticityTol) {
    raise(ErrorKind::ValidationError, "density matrix not Hermitian (error " + std::to_string(herm) + ")");
  }
  const double trace_dev = std::abs(rho_.trace() - 1.0);
  if (trace_dev > kTraceTol) {
    raise(ErrorKind::ValidationError,
          "density matrix trace deviates from 1 by " + std::to_string(trace_dev));
  }
  for (int k = 0; k < Matrix4::kDim; ++k) {
    const double p = rho_(k, k).real();
    if (p < -kPopulationTol || p > 1.0 + kPopulationTol) {
      raise(ErrorKind::ValidationError,
            "population rho_" + std::to_string(k + 1) + std::to_string(k + 1) + " = " +
                std::to_string(p) + " outside [0, 1]");
    }
  }
}

DensityMatrix DensityMatrix::pure(int level) { return DensityMatrix(Matrix4::projector(level)); }

cplx DensityMatrix::at(int row, int col) const {
  if (row < 1 || row > 4 || col < 1 || col > 4) {
    raise(ErrorKind::ValidationError,
          "density matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
              ") outside levels 1..4");
  }
  return rho_(row - 1, col - 1);
}

}  // namespace lhm
