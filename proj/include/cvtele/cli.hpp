#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cvtele/verify.hpp"

namespace cvtele {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

struct CliHooks {
  /// Closed form checked by `verify`; tests substitute a faulty one.
  FidelityFunction closed_form = fidelity_value;
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Subcommands: epr, fidelity, sweep, verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace cvtele
