#ifndef GDS_CLI_HPP
#define GDS_CLI_HPP

#include <ostream>

namespace gds
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int failure = 1; // usage or IO error
inline constexpr int counterexample = 2;
} // namespace exit_code

/// Entry point of the `gds` tool. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace gds

#endif // GDS_CLI_HPP
