#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pst::cli {

/// Stable exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,      // I/O, parse, validation or generation failure
    kBadArguments = 2,
    kNegative = 3,     // no tree found / tree rejected / oracle says none
    kBudget = 4,       // oracle node budget exhausted
    kBatchFailures = 5,
};

/// Entry point of the `pstree` tool; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pst::cli
