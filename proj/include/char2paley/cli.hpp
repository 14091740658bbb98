#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace char2paley::cli {

inline constexpr const char* kToolName = "char2paley";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCertificateFailure = 1,
  kExitConfigError = 2,
  kExitCapacity = 3,
};

// Runs one command line (without the program name). Files named by -o and
// --report are written directly; everything else goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace char2paley::cli
