#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudocore::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,    ///< unreadable/unwritable files, malformed input
  kUsage = 2,        ///< bad flags or invalid parameter values
  kNoInstances = 3,  ///< experiment had no periphery instances to run
};

/// Environment variable naming the output directory when --output is absent.
inline constexpr const char* kOutputDirEnv = "PSEUDOCORE_OUTPUT_DIR";

/// Runs one subcommand. `args` excludes the program name. Errors are
/// reported on `err` as one JSON object per line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pseudocore::cli
