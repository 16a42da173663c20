#ifndef MBFGS_CLI_HPP
#define MBFGS_CLI_HPP

#include <iosfwd>

namespace mbfgs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of the `mbfgs` tool; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace mbfgs

#endif // MBFGS_CLI_HPP
