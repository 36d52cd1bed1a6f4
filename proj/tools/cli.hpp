#pragma once

#include <iosfwd>

namespace edsum::cli {

/// Exit codes of the edsum tool.
enum exit_code : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    internal_error = 3,
};

/// Entry point of the `edsum` tool: subcommands `sum`, `verify` and
/// `approximate`. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edsum::cli
