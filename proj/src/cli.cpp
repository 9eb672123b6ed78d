#include <basel/cli.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <basel/pipeline.hpp>
#include <basel/version.hpp>

namespace basel::cli {

namespace {

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string render_plain(const pipeline::ProofReport& report, bool verbose) {
    std::string out;
    if (verbose) {
        out += "# basel-verify " + report.version + " " + report.timestamp + "\n";
    }
    for (const auto& s : report.steps) {
        out += (s.pass ? "PASS " : "FAIL ") + s.step_id + " " + fmt_full(s.computed) +
               " " + fmt_full(s.expected) + " " + fmt_short(s.abs_err) + " " +
               fmt_short(s.tol) + "\n";
        if (verbose) {
            out += "#   " + s.description + "; evals=" + std::to_string(s.n_evals);
            if (!s.notes.empty()) out += "; " + s.notes;
            out += "\n";
        }
    }
    if (verbose) {
        out += std::string("# all_pass=") + (report.all_pass ? "true" : "false") + "\n";
    }
    return out;
}

bool wants_all(const std::vector<std::string>& steps) {
    return steps.empty() ||
           std::any_of(steps.begin(), steps.end(),
                       [](const std::string& s) { return s == "all"; });
}

}  // namespace

CliOptions parse_args(const std::vector<std::string>& args) {
    CliOptions opts;
    bool all = false;

    CLI::App app{"Step-by-step numeric verification that the sum of 1/n^2 is pi^2/6"};
    app.name("basel-verify");

    std::ostringstream step_list;
    for (const auto& id : pipeline::step_ids()) step_list << " " << id;

    const CLI::Validator step_check(
        [](std::string& s) -> std::string {
            if (s == "all" || pipeline::is_known_step(s)) return {};
            return "unknown step id: " + s;
        },
        "STEP");

    app.add_option("--step", opts.steps,
                   "Step to run (repeatable); one of:" + step_list.str())
        ->check(step_check);
    app.add_flag("--all", all, "Run every registered step (default)");
    app.add_option("--tol", opts.abs_tol, "Absolute quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-evals", opts.max_evals,
                   "Integrand evaluation budget per integral")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "markdown", "plain"}))
        ->capture_default_str();
    app.add_option("--out", opts.output_path, "Write the report to this path");
    app.add_flag("--verbose", opts.verbose, "Annotate plain output");
    app.set_version_flag("--version", kVersion);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested(std::string(kVersion) + "\n");
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (all) opts.steps.clear();
    return opts;
}

int run_with_options(const CliOptions& options) {
    pipeline::PipelineConfig cfg;
    cfg.quad.abs_tol = options.abs_tol;
    cfg.quad.max_evals = options.max_evals;

    pipeline::ProofReport report;
    try {
        report = wants_all(options.steps) ? pipeline::run_all(cfg)
                                          : pipeline::run_steps(options.steps, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    std::string rendered;
    if (options.format == "json") {
        rendered = pipeline::serialize_report(report, pipeline::ReportFormat::json);
    } else if (options.format == "markdown") {
        rendered = pipeline::serialize_report(report, pipeline::ReportFormat::markdown);
    } else {
        rendered = render_plain(report, options.verbose);
    }

    if (options.output_path.empty()) {
        std::cout << rendered;
        if (!std::cout) {
            std::cerr << "error: failed writing to stdout\n";
            return 3;
        }
    } else {
        std::ofstream out(options.output_path);
        out << rendered;
        out.close();
        if (!out) {
            std::cerr << "error: cannot write " << options.output_path << "\n";
            return 3;
        }
    }
    return report.all_pass ? 0 : 1;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc) - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    CliOptions options;
    try {
        options = parse_args(args);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "run with --help for usage\n";
        return 2;
    }
    return run_with_options(options);
}

}  // namespace basel::cli
