#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bw {

inline constexpr const char* kToolName = "bwtool";
inline constexpr const char* kToolVersion = "0.1.0";

/// Run one tool invocation. Returns the process exit code: 0 on success,
/// 1 on mathematical rejection (e.g. a rejected Reeb parameter), 2 on
/// input or usage errors. Reports are printed to `out` as JSON with a
/// deterministic key order.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bw
