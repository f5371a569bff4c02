#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kLibraryError = 2,
  kVerificationFailed = 3,
};

/// Environment variable naming an optional oracle fixture/cache directory.
inline constexpr const char* kFixtureDirEnv = "BOHR_FIXTURE_DIR";

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace bohr::cli
