#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bisolve/bench.hpp"
#include "bisolve/errors.hpp"
#include "bisolve/parser.hpp"
#include "bisolve/solver.hpp"

namespace {

// 0 ok, 2 input/parse error, 3 solver failure (degenerate system etc.),
// 4 budget exhausted.
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitBudget = 4;

int default_workers() {
    if (const char* env = std::getenv("BISOLVE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

bisolve::Rational parse_rational_arg(const std::string& s) {
    return bisolve::rational_from_string(s);
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw bisolve::solver_error("cannot open output file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real solver for bivariate polynomial systems"};
    app.require_subcommand(1);

    // --- solve ---------------------------------------------------------
    std::string system_text, f_text, g_text;
    std::string mode_str = "safe", eps_str, format = "text", out_path;
    int digits = 10;
    int workers = default_workers();
    long budget = -1;
    double timeout_sec = 0;
    bool no_timings = false;

    auto* solve_cmd = app.add_subcommand("solve", "solve one system {f = 0, g = 0}");
    solve_cmd->add_option("-s,--system", system_text, "system as \"f ; g\"");
    solve_cmd->add_option("--f", f_text, "polynomial f (with --g)");
    solve_cmd->add_option("--g", g_text, "polynomial g (with --f)");
    solve_cmd->add_option("--epsilon-mode", mode_str, "safe | paper | manual")
        ->check(CLI::IsMember({"safe", "paper", "manual"}));
    solve_cmd->add_option("--epsilon", eps_str, "zero gap for manual mode, e.g. 1/1000000");
    solve_cmd->add_option("--digits", digits, "decimal digits in the report")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--workers", workers, "worker threads (default $BISOLVE_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--budget", budget, "matcher refinement budget in bisections");
    solve_cmd->add_option("--timeout", timeout_sec, "wall-clock budget in seconds");
    solve_cmd->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_option("-o,--out", out_path, "output file (default stdout)");
    solve_cmd->add_flag("--no-timings", no_timings, "omit timings from JSON output");

    // --- bench ---------------------------------------------------------
    bisolve::BenchConfig bench_cfg;
    std::string family_str = "dense", bench_mode_str = "manual", bench_eps_str;
    std::string bench_out, bench_format = "text";
    bool bench_parallel = false;

    auto* bench_cmd = app.add_subcommand("bench", "run a random-system benchmark family");
    bench_cmd->add_option("--family", family_str, "dense | sparse | multiple-root")
        ->check(CLI::IsMember({"dense", "sparse", "multiple-root"}));
    bench_cmd->add_option("--degree", bench_cfg.degree, "total degree of generated systems")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--coeff-bound", bench_cfg.coeff_bound, "coefficients in [-b, b]")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--instances", bench_cfg.instances, "number of systems")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_cfg.seed, "generator seed");
    bench_cmd->add_option("--budget", bench_cfg.time_budget_sec,
                          "per-instance wall-clock budget in seconds");
    bench_cmd->add_option("--monomials", bench_cfg.sparse_monomials,
                          "monomials per polynomial in the sparse family")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--epsilon-mode", bench_mode_str, "safe | paper | manual")
        ->check(CLI::IsMember({"safe", "paper", "manual"}));
    bench_cmd->add_option("--epsilon", bench_eps_str, "manual zero gap (default 1/10^30)");
    bench_cmd->add_option("--workers", bench_cfg.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--parallel-instances", bench_parallel,
                        "run instances concurrently instead of parallelizing within one");
    bench_cmd->add_option("--format", bench_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    bench_cmd->add_option("-o,--out", bench_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            if (system_text.empty() == (f_text.empty() && g_text.empty())) {
                std::cerr << "error: give either --system or both --f and --g\n";
                return kExitParse;
            }
            if (system_text.empty() && (f_text.empty() || g_text.empty())) {
                std::cerr << "error: --f and --g must be given together\n";
                return kExitParse;
            }
            bisolve::SystemInput input;
            if (!system_text.empty()) {
                auto parsed = bisolve::parse_system(system_text);
                input = {parsed.f, parsed.g, system_text};
            } else {
                input = {bisolve::parse_poly(f_text), bisolve::parse_poly(g_text),
                         f_text + " ; " + g_text};
            }
            bisolve::SolveOptions opts;
            opts.mode = *bisolve::epsilon_mode_from_string(mode_str);
            if (!eps_str.empty()) opts.manual_eps = parse_rational_arg(eps_str);
            opts.workers = workers;
            opts.refinement_budget = budget;
            opts.digits = digits;
            if (timeout_sec > 0)
                opts.deadline = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(timeout_sec));
            bisolve::SolveReport report = bisolve::solve(input, opts);
            write_out(out_path, format == "json"
                                    ? bisolve::report_to_json(report, !no_timings)
                                    : bisolve::report_to_text(report));
            return 0;
        }

        // bench
        if (family_str == "dense") bench_cfg.family = bisolve::BenchFamily::dense;
        else if (family_str == "sparse") bench_cfg.family = bisolve::BenchFamily::sparse;
        else bench_cfg.family = bisolve::BenchFamily::multiple_root;
        bench_cfg.mode = *bisolve::epsilon_mode_from_string(bench_mode_str);
        if (!bench_eps_str.empty()) bench_cfg.manual_eps = parse_rational_arg(bench_eps_str);
        bench_cfg.parallel_instances = bench_parallel;
        bisolve::BenchResult result = bisolve::bench_run(bench_cfg);
        write_out(bench_out, bench_format == "json" ? bisolve::bench_to_json(result)
                                                    : bisolve::bench_table(result));
        return 0;
    } catch (const bisolve::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bisolve::refinement_budget_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const bisolve::time_budget_exceeded& e) {
        std::cerr << "time budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const bisolve::solver_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}
