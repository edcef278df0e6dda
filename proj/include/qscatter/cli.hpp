#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qscatter::cli {

inline constexpr std::string_view kToolName = "qscatter";
inline constexpr std::string_view kVersion = "1.0.0";

// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitComputation = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "QSCATTER_CONFIG";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qscatter::cli
