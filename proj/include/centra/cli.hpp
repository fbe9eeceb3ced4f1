#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace centra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundViolation = 3;

/// Entry point of the `centra` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace centra::cli
