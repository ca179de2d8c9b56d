#ifndef CUSPFILL_CLI_HPP
#define CUSPFILL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cuspfill::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kExitVerificationFailed = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cuspfill::cli

#endif
