// Worksheet runner: parses a linkage worksheet, executes its tasks, and
// emits a text or machine report.
//
// Exit codes: 0 all tasks passed (or were inconclusive), 1 some task
// failed, 2 engine error / resource cap / bad input.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "report_json.hpp"

namespace {

void apply_env_caps() {
    if (const char* v = std::getenv("LNK_MAX_DEGREE")) lnk::caps().max_degree = std::atoll(v);
    if (const char* v = std::getenv("LNK_MAX_BASIS")) lnk::caps().max_basis = std::atoll(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-module linkage workbench"};
    app.require_subcommand(1);

    auto* runcmd = app.add_subcommand("run", "run a worksheet file");
    std::string file;
    uint64_t seed = 0;
    int64_t max_degree = 24;
    std::string window = "-2..8";
    std::string report = "text";
    int jobs = 1;
    runcmd->add_option("file", file, "worksheet file")->required();
    runcmd->add_option("--seed", seed, "probe seed");
    runcmd->add_option("--max-degree", max_degree, "degree cap");
    runcmd->add_option("--window", window, "default degree window lo..hi");
    runcmd->add_option("--report", report, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
    runcmd->add_option("--jobs", jobs, "task-level parallelism");

    CLI11_PARSE(app, argc, argv);

    apply_env_caps();
    lnk::caps().max_degree = max_degree;
    if (const char* v = std::getenv("LNK_MAX_DEGREE")) lnk::caps().max_degree = std::atoll(v);

    lnk::RunFlags flags;
    flags.seed = seed;
    flags.jobs = jobs;
    try {
        auto dots = window.find("..");
        if (dots == std::string::npos) throw lnk::LnkError("--window expects lo..hi");
        flags.window_lo = std::stoll(window.substr(0, dots));
        flags.window_hi = std::stoll(window.substr(dots + 2));

        lnk::Worksheet w = lnk::parse_worksheet_file(file);
        lnk::RunReport rep = lnk::run(w, flags);
        rep.seed = seed;
        if (report == "machine")
            std::cout << lnk::render_machine(rep);
        else
            std::cout << lnk::render_text(rep);
        return rep.exit_code();
    } catch (const lnk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
