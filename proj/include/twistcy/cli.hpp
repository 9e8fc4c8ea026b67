#pragma once

#include <iosfwd>

namespace twistcy {

/// Command-line entry point. Returns 0 on success, 1 on a verification
/// failure and 2 on malformed flags or input files.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twistcy
