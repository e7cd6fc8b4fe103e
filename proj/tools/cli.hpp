#pragma once

#include <iosfwd>

namespace cospec::cli {

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cospec::cli
