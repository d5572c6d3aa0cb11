#pragma once

#include <string>
#include <vector>

namespace monolap::cli {

// Exit codes: 0 success, 2 claim failure, 3 indeterminate verdict,
// 64 usage error, 65 bad config / unknown identifier.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailure = 2;
inline constexpr int kIndeterminate = 3;
inline constexpr int kUsage = 64;
inline constexpr int kBadConfig = 65;
inline constexpr int kInternal = 70;

int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace monolap::cli
