#pragma once

#include <iosfwd>

namespace adoheston::cli {

enum ExitCode : int { ok = 0, validation = 2, numerical = 3 };

// Parses arguments, runs one subcommand, maps failures to exit codes.
// Output goes to --out when given, else to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace adoheston::cli
