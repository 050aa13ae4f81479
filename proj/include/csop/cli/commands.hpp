#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csop::cli {

inline constexpr const char* kToolName = "csop";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,         // success / member
  kExitUsage = 1,      // usage or input error
  kExitNotMember = 2,  // definite non-membership
  kExitBreakdown = 3,  // numerical breakdown in the construction
};

/// Entry point behind the `csop` binary. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csop::cli
