#ifndef ECCALU_CLI_HPP
#define ECCALU_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eccalu {

inline constexpr const char* kToolName = "eccalu";
inline constexpr const char* kToolVersion = "0.1.0";

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 success / property holds, 1 property violated, 2 usage or config error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccalu

#endif
