#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paltrip::cli {

/// Exit codes: 0 success, 1 a verification found a failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paltrip::cli
