#pragma once

namespace gad::cli {

// Parses and executes one command line. Returns the process exit code:
// 0 success, 2 usage error, 3 I/O error, 4 data integrity error.
int run(int argc, const char* const* argv);

}  // namespace gad::cli
