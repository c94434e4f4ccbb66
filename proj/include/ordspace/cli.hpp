#pragma once

#include <iosfwd>

namespace ordspace {

/// Runs the command line tool. Results go to out, one JSON record per line;
/// diagnostics go to err. Returns 0 on success, 1 on domain errors and 2 on
/// usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordspace
