#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jrc::cli {

inline constexpr std::string_view kToolVersion = "0.3.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  ///< a self-check (waveform-validate) did not pass
    kExitInfeasible = 2,   ///< QoS/power infeasible or below the Monte Carlo SNR guard
    kExitUsage = 3,        ///< bad arguments, bad scenario, refused overwrite
};

/// Runs the command line `args` (without the program name). Diagnostics go
/// to `err`, progress summaries to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jrc::cli
