#include "lhm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "lhm/calibration.hpp"
#include "lhm/config.hpp"
#include "lhm/errors.hpp"
#include "lhm/features.hpp"
#include "lhm/io.hpp"
#include "lhm/steady_state.hpp"
#include "lhm/sweep.hpp"
#include "lhm/validation.hpp"

namespace lhm {

namespace {

// Flags shared by the subcommands; unset optionals keep the config value.
struct Common {
  std::string config;
  std::string out;
  std::optional<double> delta1;
  std::optional<std::size_t> points;
  std::optional<double> tol_abs;
  std::string branch;
  std::string format;
};

struct Extra {
  std::string method = "linear";
  std::size_t phases = 72;
  std::pair<double, double> d21_range{1e-30, 1e-28};
  std::pair<double, double> mu42_range{1e-24, 1e-21};
  std::size_t grid = 41;
  std::string targets = "fig2";
  bool quick = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_delta1, bool with_grid) {
  cmd->add_option("--config", c.config, "config file or bundled preset name (fig2.cfg, fig3.cfg)")->required();
  cmd->add_option("--out", c.out, "output file (default: config output_path, else stdout)");
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  if (with_delta1) cmd->add_option("--delta1", c.delta1, "probe detuning in units of gamma");
  if (with_grid) {
    cmd->add_option("--points", c.points, "sweep grid points");
    cmd->add_option("--tol-abs", c.tol_abs, "zero-absorption tolerance on |Im n|");
  }
  cmd->add_option("--branch", c.branch, "paper or physical")->check(CLI::IsMember({"paper", "physical"}));
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = load_config(c.config);
  if (c.delta1) cfg.system.delta1 = *c.delta1;
  if (c.points) cfg.points = *c.points;
  if (c.tol_abs) cfg.tol_abs = *c.tol_abs;
  if (!c.branch.empty()) cfg.branch = parse_branch(c.branch);
  if (!c.format.empty()) cfg.format = parse_format(c.format);
  if (!c.out.empty()) cfg.output_path = c.out;
  cfg.validate();
  return cfg;
}

// Writes through `emit` to the configured file or to `out`.
void deliver(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (cfg.output_path.empty()) {
    emit(out);
    return;
  }
  std::ostringstream buffer;
  emit(buffer);
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) raise(ErrorKind::ValidationError, "cannot open output file '" + cfg.output_path + "'");
  file << buffer.str();
  if (!file) raise(ErrorKind::ValidationError, "failed writing '" + cfg.output_path + "'");
}

ExecutionOptions exec_options() { return ExecutionOptions{threads_from_environment()}; }

int cmd_steady(const Common& c, const Extra& x, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  SteadyStateResult result = [&] {
    if (x.method == "integrate")
      return steady_state_integrate(cfg.system, default_initial_state(), IntegratorConfig::for_params(cfg.system));
    return steady_state_linear(cfg.system);
  }();
  deliver(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      io::write_steady_json(os, result, cfg.system.delta1);
    else
      io::write_steady_csv(os, result, cfg.system.delta1);
  });
  return kExitOk;
}

int cmd_sweep(const Common& c, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  const ResponseCurve curve = sweep(cfg.sweep_spec(), exec_options());
  deliver(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      io::write_curve_json(os, curve);
    else
      io::write_curve_csv(os, curve);
  });
  return kExitOk;
}

int cmd_features(const Common& c, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  const FeatureReport report = extract_features(sweep(cfg.sweep_spec(), exec_options()), cfg.tol_abs);
  deliver(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      io::write_features_json(os, report);
    else
      io::write_features_csv(os, report);
  });
  return kExitOk;
}

int cmd_phase_scan(const Common& c, const Extra& x, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  if (x.phases == 0) raise(ErrorKind::ValidationError, "--phases must be >= 1");
  std::vector<double> phases;
  for (std::size_t k = 0; k < x.phases; ++k)
    phases.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(x.phases));
  const auto points = phase_scan(cfg.system, cfg.medium, phases, cfg.system.delta1, cfg.branch);
  deliver(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      io::write_phase_scan_json(os, points, cfg.system.delta1);
    else
      io::write_phase_scan_csv(os, points);
  });
  return kExitOk;
}

int cmd_calibrate(const Common& c, const Extra& x, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  CalibrationTargets targets = x.targets == "fig3" ? CalibrationTargets::figure3() : CalibrationTargets::figure2();
  if (c.tol_abs) targets.tol_abs = *c.tol_abs;
  const SearchRange d21{x.d21_range.first, x.d21_range.second, x.grid};
  const SearchRange mu42{x.mu42_range.first, x.mu42_range.second, x.grid};
  CalibrationOptions opts;
  opts.exec = exec_options();
  const CalibrationResult result = calibrate_dipoles(targets, cfg.sweep_spec(), d21, mu42, opts);
  deliver(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      io::write_calibration_json(os, result);
    else
      io::write_calibration_csv(os, result);
  });
  return kExitOk;
}

int cmd_validate(const Common& c, const Extra& x, std::ostream& out) {
  const RunConfig cfg = resolve(c);
  ValidationOptions opts;
  opts.integration_checks = !x.quick;
  const ValidationReport report = run_validation(cfg.system, cfg.medium, opts);
  deliver(cfg, out, [&](std::ostream& os) { print_report(os, report); });
  return report.ok() ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state response of a driven four-level Y-type atomic medium", "lhm-sim"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  Common c;
  Extra x;

  auto* steady = app.add_subcommand("steady", "steady-state density matrix and residual");
  add_common(steady, c, true, false);
  steady->add_option("--method", x.method, "linear or integrate")->check(CLI::IsMember({"linear", "integrate"}));

  auto* sw = app.add_subcommand("sweep", "response curve over the probe detuning");
  add_common(sw, c, false, true);

  auto* feat = app.add_subcommand("features", "absorption, gain and left-handed intervals of a sweep");
  add_common(feat, c, false, true);

  auto* phase = app.add_subcommand("phase-scan", "response over the coupling phase at fixed detuning");
  add_common(phase, c, true, false);
  phase->add_option("--phases", x.phases, "phases evenly spaced over [0, 2pi)");

  auto* cal = app.add_subcommand("calibrate", "fit d21 and mu42 to a target feature set");
  add_common(cal, c, false, true);
  cal->add_option("--d21-range", x.d21_range, "d21 search range in C m, as lo,hi")->delimiter(',');
  cal->add_option("--mu42-range", x.mu42_range, "mu42 search range in J/T, as lo,hi")->delimiter(',');
  cal->add_option("--grid", x.grid, "log grid points per axis");
  cal->add_option("--targets", x.targets, "fig2 or fig3")->check(CLI::IsMember({"fig2", "fig3"}));

  auto* val = app.add_subcommand("validate", "run the invariant suite");
  add_common(val, c, false, false);
  val->add_flag("--quick", x.quick, "skip the integration comparisons");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (steady->parsed()) return cmd_steady(c, x, out);
    if (sw->parsed()) return cmd_sweep(c, out);
    if (feat->parsed()) return cmd_features(c, out);
    if (phase->parsed()) return cmd_phase_scan(c, x, out);
    if (cal->parsed()) return cmd_calibrate(c, x, out);
    return cmd_validate(c, x, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace lhm
