#pragma once

#include <ostream>

namespace ekt::cli {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kCap = 3, kNotNormal = 4, kInconsistent = 5, kNotATrivial = 6 };

// The whole command line front end; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ekt::cli
