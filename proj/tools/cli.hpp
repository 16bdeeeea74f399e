#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccomp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitNumerical = 2,
  kExitDecisionFalse = 3,
  kExitInvalidCertificate = 4,
};

/// Environment variable naming the default tolerance profile.
inline constexpr const char* kProfileEnv = "CCOMP_TOLERANCE_PROFILE";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccomp::cli
