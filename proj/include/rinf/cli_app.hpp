#ifndef RINF_CLI_APP_HPP
#define RINF_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rinf::cli {

/// One named check inside a command run.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Command report: echoes the invocation, lists parameters and per-check
/// results. Text output appends wall time; JSON output omits it so that
/// identical inputs and seeds produce identical documents.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_pass() const;
    void print_text(std::ostream& out) const;
};

/// Runs the command line. args excludes the program name. Exit codes:
/// 0 success, 2 usage/parameter error, 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rinf::cli

#endif
