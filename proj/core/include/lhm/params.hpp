#pragma once

namespace lhm {

// Drive, detuning and decay parameters of the four-level Y-type atom.
//
// Everything except gamma_scale is expressed in units of the scale rate
// gamma. The decay fields are the "half" rates: level |1> decays to |2> at
// 2*gamma1, |4> to |2> at 2*gamma4, and |2> to |3> at 2*gamma2.
struct SystemParams {
  double omega1 = 0.0;  // probe Rabi frequency, |1>-|2>
  double omega2 = 0.0;  // signal Rabi frequency, |2>-|3>
  double omega3 = 0.0;  // coupling Rabi frequency magnitude, |1>-|4>
  double phi3 = 0.0;    // coupling phase, radians
  double delta1 = 0.0;  // probe detuning w12 - w1
  double delta2 = 0.0;  // signal detuning w23 - w2
  double delta4 = 0.0;  // coupling detuning; the coupling field is resonant by default
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma4 = 0.0;
  double gamma_scale = 1.0e6;  // gamma in s^-1

  // Throws Error{ValidationError} naming the first violated invariant:
  // rates > 0, Rabi magnitudes >= 0, all values finite.
  void validate() const;

  // Loose check used by the solvers: finite values and non-negative
  // magnitudes. Zero rates are allowed so degenerate systems surface as
  // SingularLiouvillian instead of a validation failure.
  void validate_finite() const;

  // Coupling field with phase, Omega3 * exp(i*phi3) without the complex type.
  double coupling_re() const;
  double coupling_im() const;

  bool operator==(const SystemParams&) const = default;
};

namespace presets {

// Shared settings of both figure parameter sets (gamma1 = gamma4 = 0.001,
// gamma2 = 0.005, Omega1 = 0.8, Omega2 = 0.12, Delta2 = 0.001, gamma = 1e6 s^-1).
SystemParams figure_common(double delta1 = 0.0);
// Omega3 = 2.8, Phi3 = pi/3.
SystemParams figure2(double delta1 = 0.0);
// Omega3 = 3.8, Phi3 = 4pi/3.
SystemParams figure3(double delta1 = 0.0);

}  // namespace presets

}  // namespace lhm
