#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace basel::cli {

/// Parsed command line. An empty steps list (or one containing "all")
/// selects every registered step.
struct CliOptions {
    std::vector<std::string> steps;
    double abs_tol = 1e-8;
    long long max_evals = 1'000'000;
    std::string format = "plain";  // json | markdown | plain
    std::string output_path;       // empty writes to stdout
    bool verbose = false;
};

/// Malformed flags, values, or unknown step ids; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; carries the help text, maps to exit code 0.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name) in natural order.
CliOptions parse_args(const std::vector<std::string>& args);

/// Runs the selected steps and writes the report. Returns the exit code:
/// 0 all pass, 1 some step failed, 3 internal or I/O error.
int run_with_options(const CliOptions& options);

/// Full front end: parse, run, map errors to exit codes (2 for usage).
int run(int argc, const char* const* argv);

}  // namespace basel::cli
