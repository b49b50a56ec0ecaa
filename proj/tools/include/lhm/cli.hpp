#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhm {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one lhm-sim invocation. `args` excludes the program name. Results go
// to `out` unless an output path is configured; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lhm
