#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bqtop {

inline constexpr const char* kToolVersion = "0.3.1";
inline constexpr int kSchemaVersion = 1;

enum ExitCode { kExitOk = 0, kExitVerdict = 1, kExitInput = 2 };

/// Runs one bqtop invocation; args exclude the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqtop
