/* Command-line front end: subcommands, reports and the exit-code contract
 * (0 success/certified/pass, 1 well-formed negative, 2 input/guard error). */

#ifndef TVERBERG_CLI_HPP
#define TVERBERG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tverberg::cli {

inline constexpr const char* kToolName = "tverberg";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tverberg::cli

#endif
