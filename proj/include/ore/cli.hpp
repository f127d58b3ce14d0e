#pragma once

#include <iosfwd>

namespace ore::cli {

// Full command dispatch; returns the process exit status:
//   0 success, 1 check/computation failure, 2 usage error.
// Streams are injected so tests can capture output in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ore::cli
