#pragma once

#include <ostream>

namespace markov::cli {

// Runs one invocation. Output goes to `out` unless --out names a file;
// diagnostics go to `err`. Returns 0 on success, 1 on a domain error and 2
// on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace markov::cli
