#pragma once

#include <istream>
#include <ostream>

namespace entcat::cli {

enum ExitCode : int {
    kEvaluated = 0,
    kInputError = 1,
    kInconsistent = 2,
};

/// Runs the command line; `in` supplies request documents for `--request -`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace entcat::cli
