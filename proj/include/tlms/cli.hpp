#pragma once

#include <iosfwd>

namespace tlms {

// Full command-line front end; returns the process exit code. Streams are
// injected so tests can drive the CLI in-process.
// Exit codes: 0 ok, 2 validation/precondition failure, 3 no feasible radius,
// 4 degenerate data under --policy error, 5 verification failure, 64 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlms
