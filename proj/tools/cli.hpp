#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// as JSON lines, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dissoc::cli
