#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lhcone::cli {

/// Exit codes of `run`.
enum ExitCode : int {
    kOk = 0,
    kNegativeVerdict = 1,  // predicate subcommand answered "no"
    kUsageError = 2,       // bad flags, unknown subcommand, malformed spec
    kRuntimeError = 3,     // budget exceeded, horizon too small, internal check failed
};

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` in the selected format, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lhcone::cli
