#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lhm/em_response.hpp"
#include "lhm/features.hpp"
#include "lhm/params.hpp"
#include "lhm/sweep.hpp"

namespace lhm {

enum class OutputFormat { Csv, Json };

std::string_view format_name(OutputFormat format) noexcept;
OutputFormat parse_format(std::string_view text);

// Everything a CLI run needs. Units are carried by the config key names.
struct RunConfig {
  SystemParams system;  // system.delta1 from delta1_over_gamma (default 0)
  MediumParams medium;
  double delta1_min = -150.0;
  double delta1_max = 150.0;
  std::size_t points = kDefaultSweepPoints;
  double tol_abs = kDefaultTolAbs;
  Branch branch = Branch::Paper;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;

  SweepSpec sweep_spec() const;
  void validate() const;
};

// Config text grammar, one entry per line:
//
//   line    := blank | comment | entry
//   comment := '#' anything
//   entry   := key '=' value [comment]
//
// Keys and values are trimmed. Keys may appear once. Angles (phi3_rad) take
// a real number of radians or the symbolic forms "pi", "pi/3", "4pi/3",
// "-2*pi/3". Required keys: omega1_over_gamma, omega2_over_gamma,
// omega3_over_gamma, phi3_rad, delta2_over_gamma, gamma1_over_gamma,
// gamma2_over_gamma, gamma4_over_gamma. Optional keys and defaults:
// delta1_over_gamma 0, delta4_over_gamma 0, gamma_scale_per_s 1e6,
// density_per_m3 0.25e24, d21_C_m 2e-29, mu42_J_per_T 9.2740100783e-24,
// delta1_min_over_gamma -150, delta1_max_over_gamma 150, points 3001,
// tol_abs 0.02, branch paper, output_path (stdout), format csv.
//
// Throws Error{ParseError} naming line and key for syntax problems and
// unknown or duplicate keys, Error{ValidationError} for missing required
// keys (all listed) and violated invariants.
RunConfig parse_config(std::string_view text);

// Reads a config file. When `path` does not exist and names a bundled preset
// ("fig2.cfg", "fig3.cfg"), the compiled-in copy is used.
RunConfig load_config(const std::string& path);

// Compiled-in preset text, or nullopt for unknown names.
std::optional<std::string_view> bundled_preset(std::string_view name);

// Radians from "1.047", "pi/3", "4pi/3", "-2*pi/3", ...
double parse_angle(std::string_view text);

}  // namespace lhm
