#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "lhm/density_matrix.hpp"
#include "lhm/em_response.hpp"
#include "lhm/params.hpp"

namespace lhm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

struct ValidationOptions {
  std::uint64_t seed = 20240611;
  std::size_t random_states = 1000;
  bool integration_checks = true;  // the slow oracle comparisons
};

// Invariant suite around one parameter set: RHS conservation and its
// agreement with a generic Lindblad evaluation, steady-state contracts,
// response-map identities and the feature-extraction oracle.
ValidationReport run_validation(const SystemParams& params, const MediumParams& medium,
                                const ValidationOptions& options = {});

// "PASS name: detail" per check, then a count line.
void print_report(std::ostream& out, const ValidationReport& report);

// Random full-rank state: A A^dagger / tr with Gaussian complex A.
DensityMatrix random_density_matrix(std::mt19937_64& rng);

// Reference evaluation of -i[H, rho] + sum_k (L rho L^dagger - {L^dagger L, rho}/2)
// with L_k the three jump operators, built from full matrix products.
Matrix4 lindblad_reference_rhs(const Matrix4& rho, const SystemParams& params);

}  // namespace lhm
