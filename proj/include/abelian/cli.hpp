#pragma once

#include <iosfwd>

namespace abelian::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_io = 3,
};

/// Entry point of the `abrun` tool. `in` stands in for standard input when an
/// input path is `-`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abelian::cli
