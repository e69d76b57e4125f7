#pragma once

namespace ansec::cli {

inline constexpr const char* kVersion = "1.0.0";

// Parses and executes one command line. Returns the process exit code:
// 0 success (including statistical FAIL reports from simulate),
// 2 usage or domain error, 3 infeasibility, 4 I/O error, 1 unexpected.
int run(int argc, char** argv);

} // namespace ansec::cli
