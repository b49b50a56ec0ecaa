#include "lhm/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lhm/errors.hpp"

namespace lhm {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) raise(ErrorKind::ValidationError, std::string(name) + " must be finite");
}

void require_non_negative(double value, const char* name) {
  require_finite(value, name);
  if (value < 0.0) raise(ErrorKind::ValidationError, std::string(name) + " must be >= 0");
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (!(value > 0.0)) raise(ErrorKind::ValidationError, std::string(name) + " must be > 0");
}

}  // namespace

void SystemParams::validate_finite() const {
  require_non_negative(omega1, "omega1");
  require_non_negative(omega2, "omega2");
  require_non_negative(omega3, "omega3");
  require_finite(phi3, "phi3");
  require_finite(delta1, "delta1");
  require_finite(delta2, "delta2");
  require_finite(delta4, "delta4");
  require_non_negative(gamma1, "gamma1");
  require_non_negative(gamma2, "gamma2");
  require_non_negative(gamma4, "gamma4");
  require_positive(gamma_scale, "gamma_scale");
}

void SystemParams::validate() const {
  validate_finite();
  require_positive(gamma1, "gamma1");
  require_positive(gamma2, "gamma2");
  require_positive(gamma4, "gamma4");
}

double SystemParams::coupling_re() const { return omega3 * std::cos(phi3); }
double SystemParams::coupling_im() const { return omega3 * std::sin(phi3); }

namespace presets {

SystemParams figure_common(double delta1) {
  SystemParams p;
  p.omega1 = 0.8;
  p.omega2 = 0.12;
  p.delta1 = delta1;
  p.delta2 = 0.001;
  p.delta4 = 0.0;
  p.gamma1 = 0.001;
  p.gamma2 = 0.005;
  p.gamma4 = 0.001;
  p.gamma_scale = 1.0e6;
  return p;
}

SystemParams figure2(double delta1) {
  SystemParams p = figure_common(delta1);
  p.omega3 = 2.8;
  p.phi3 = std::numbers::pi / 3.0;
  return p;
}

SystemParams figure3(double delta1) {
  SystemParams p = figure_common(delta1);
  p.omega3 = 3.8;
  p.phi3 = 4.0 * std::numbers::pi / 3.0;
  return p;
}

}  // namespace presets

}  // namespace lhm
