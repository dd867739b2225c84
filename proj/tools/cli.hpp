#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace localg::cli {

enum ExitCode : int {
    ok = 0,
    property_failure = 1,
    usage_error = 2,
    domain_error = 3,
};

/// Runs one command line (without the program name). Human output goes to
/// `out`, diagnostics to `err`; the JSON report goes to the --json path, or
/// replaces the human output when the path is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace localg::cli
