#pragma once

#include <iosfwd>

namespace extlab::cli {

// Runs the ext-lab command line. Exit codes: 0 success, 1 property or
// internal failure, 2 usage or config validation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extlab::cli
