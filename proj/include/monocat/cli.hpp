#pragma once

#include <iosfwd>

namespace monocat {

/// Runs the command-line tool. Returns 0 on success, 1 when a checked property
/// fails and 2 on malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace monocat
