#ifndef HCONT_TOOLS_CLI_HPP
#define HCONT_TOOLS_CLI_HPP

#include <iosfwd>

namespace hcont::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

// Entry point of the `hcont` tool. Reports go to `out`, notes and errors
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hcont::cli

#endif
