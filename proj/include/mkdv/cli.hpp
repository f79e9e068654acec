#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mkdv/config.hpp"
#include "mkdv/report.hpp"

namespace mkdv::cli {

/// Stable process exit codes.
enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericalAbort = 2, kVerdictFailure = 3 };

/// Parses "subcommand --key value ... [--config file]". Flags override file
/// values. Throws ConfigError on any problem.
RunConfig parse_config(const std::vector<std::string>& args);

/// Rebuilds the configuration echoed into a report ("config.*" parameters).
RunConfig config_from_echo(const std::map<std::string, std::string>& parameters);

/// Adds "config.*" entries describing `cfg` to `report`.
void echo_config(const RunConfig& cfg, ExperimentReport& report);

/// Runs a resolved configuration; machine-readable output goes to `out`,
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv-level entry point used by the mkdv-lab executable.
int main_entry(int argc, char** argv);

}  // namespace mkdv::cli
