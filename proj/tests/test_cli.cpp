#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <basel/cli.hpp>

using namespace basel::cli;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BASEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

size_t count_lines(const std::string& text, const std::string& prefix) {
    size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("parse_args: defaults") {
    const auto opts = parse_args({});
    CHECK(opts.steps.empty());
    CHECK(opts.abs_tol == 1e-8);
    CHECK(opts.max_evals == 1'000'000);
    CHECK(opts.format == "plain");
    CHECK(opts.output_path.empty());
    CHECK(!opts.verbose);
}

TEST_CASE("parse_args: step selection and tolerance") {
    const auto opts = parse_args({"--step", "g0", "--tol", "1e-10"});
    CHECK(opts.steps == std::vector<std::string>{"g0"});
    CHECK(opts.abs_tol == 1e-10);
}

TEST_CASE("parse_args: full run to file") {
    const auto opts = parse_args({"--all", "--format", "json", "--out", "report.json"});
    CHECK(opts.steps.empty());
    CHECK(opts.format == "json");
    CHECK(opts.output_path == "report.json");
}

TEST_CASE("parse_args: repeatable steps, literal all, verbose") {
    const auto opts = parse_args({"--step", "g0", "--step", "basel", "--verbose"});
    CHECK(opts.steps == std::vector<std::string>{"g0", "basel"});
    CHECK(opts.verbose);
    CHECK(parse_args({"--step", "all"}).steps == std::vector<std::string>{"all"});
}

TEST_CASE("parse_args: rejects bad input") {
    CHECK_THROWS_AS(parse_args({"--step", "nonsense"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--tol", "abc"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--tol", "-1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--tol", "0"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--max-evals", "0"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--format", "xml"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--tol"}), UsageError);

    try {
        parse_args({"--step", "nonsense"});
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("nonsense") != std::string::npos);
    }
}

TEST_CASE("parse_args: help carries the flag summary") {
    try {
        parse_args({"--help"});
        FAIL("expected HelpRequested");
    } catch (const HelpRequested& h) {
        const std::string text = h.what();
        CHECK(text.find("--step") != std::string::npos);
        CHECK(text.find("--format") != std::string::npos);
    }
}

TEST_CASE("end-to-end: single step") {
    const auto r = run_cli("--step g0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("PASS g0 ", 0) == 0);
    CHECK(count_lines(r.out, "PASS") == 1);
}

TEST_CASE("end-to-end: full run") {
    const auto r = run_cli("--all");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out, "PASS") == 12);
    CHECK(count_lines(r.out, "FAIL") == 0);
}

TEST_CASE("end-to-end: json output parses and passes") {
    const auto r = run_cli("--all --format json");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["all_pass"].get<bool>());
    CHECK(parsed["steps"].size() == 12);
}

TEST_CASE("end-to-end: unachievable tolerance fails visibly") {
    const auto r = run_cli("--step moments --tol 1e-15 --max-evals 20000");
    CHECK(r.exit_code == 1);
    CHECK(r.out.rfind("FAIL moments ", 0) == 0);
}

TEST_CASE("end-to-end: json stays parseable on failure") {
    const auto r = run_cli("--step moments --tol 1e-15 --max-evals 20000 --format json");
    CHECK(r.exit_code == 1);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(!parsed["all_pass"].get<bool>());
}

TEST_CASE("end-to-end: usage and IO error exit codes") {
    CHECK(run_cli("--step nonsense").exit_code == 2);
    CHECK(run_cli("--bogus").exit_code == 2);
    CHECK(run_cli("--step g0 --out /nonexistent-dir/r.json").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("end-to-end: report written to file") {
    const std::string path = "/tmp/basel_cli_test_report.json";
    std::remove(path.c_str());
    const auto r = run_cli("--step g0 --step g1 --format json --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto parsed = nlohmann::json::parse(in);
    CHECK(parsed["steps"].size() == 2);
    CHECK(parsed["all_pass"].get<bool>());
    std::remove(path.c_str());
}

TEST_CASE("run_with_options writes a report and reports IO failure") {
    const std::string path = "/tmp/basel_cli_options_report.json";
    std::remove(path.c_str());
    CliOptions opts;
    opts.steps = {"g0"};
    opts.format = "json";
    opts.output_path = path;
    CHECK(run_with_options(opts) == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto parsed = nlohmann::json::parse(in);
    CHECK(parsed["steps"].size() == 1);
    std::remove(path.c_str());

    opts.output_path = "/nonexistent-dir/r.json";
    CHECK(run_with_options(opts) == 3);
}
