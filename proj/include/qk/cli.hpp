#ifndef QK_CLI_HPP
#define QK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitConjectureFailure = 2;

/// Entry point of the `qk` tool. args excludes the program name.
/// Exit codes: 0 success, 1 usage or input error, 2 a checked statement failed.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qk::cli

#endif  // QK_CLI_HPP
