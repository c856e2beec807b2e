#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hprop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hprop::cli
