#pragma once

#include <iosfwd>

namespace esw {

// Whole command-line surface (solve / scan / series / oracle). Streams are
// injected so tests can drive commands in-process and capture the output.
// Returns the process exit code: 0 found / complete capture / identity
// holds, 1 incomplete or not found, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace esw
