#pragma once

#include "lhm/matrix4.hpp"

namespace lhm {

// Validated density matrix: Hermitian, unit trace, populations in [0, 1] up
// to the tolerances below. Immutable once constructed.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPopulationTol = 1e-10;

  // Throws Error{ValidationError} when an invariant is violated.
  explicit DensityMatrix(const Matrix4& rho);

  // Pure state |level><level|, 1-based.
  static DensityMatrix pure(int level);

  const Matrix4& matrix() const { return rho_; }

  // 1-based element access, e.g. at(1, 2) is rho_12.
  cplx at(int row, int col) const;
  double population(int level) const { return at(level, level).real(); }

  bool operator==(const DensityMatrix&) const = default;

 private:
  Matrix4 rho_;
};

}  // namespace lhm
