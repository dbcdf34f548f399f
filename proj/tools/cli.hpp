#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bvtorus::cli {

/// Exit codes: 0 success, 1 a verified identity failed, 2 usage or input error.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvtorus::cli
