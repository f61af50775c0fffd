#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmm {

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2, exit_io = 3 };

/// Entry point of the `fmm` tool. `args` excludes the program name.
/// Subcommands: encode, train, recall, classify, eval, noise-sweep,
/// verify-paper. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmm
