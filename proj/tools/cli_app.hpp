#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonisog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapability = 2;
inline constexpr int kExitInternal = 3;

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonisog::cli
