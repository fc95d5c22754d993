#pragma once

#include <ostream>

namespace xyzmin::cli {

/// Entry point of the xyzmin command; returns the process exit status
/// (0 success, 1 runtime or verification failure, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xyzmin::cli
