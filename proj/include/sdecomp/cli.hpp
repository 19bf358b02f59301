#ifndef SDECOMP_CLI_HPP
#define SDECOMP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdecomp {

/// Exit codes: 0 success, 1 verification or hypothesis failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdecomp

#endif  // SDECOMP_CLI_HPP
