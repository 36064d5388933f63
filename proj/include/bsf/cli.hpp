#pragma once

#include <iosfwd>

namespace bsf {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_solver = 3,
    exit_disagreement = 4,
};

/// Runs `bsf <subcommand> ...` with reports on `out` and error objects on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsf
