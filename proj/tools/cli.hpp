#pragma once

#include <iosfwd>

namespace casimir::cli {

/// Run the command-line front end. Returns the process exit status:
/// 0 on success, 1 on a computation error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
