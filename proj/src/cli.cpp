#include "mbfgs/cli.hpp"

#include "mbfgs/bench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace mbfgs {

namespace {

struct SolverFlags {
    double m = 1e-5;
    double M = 1e5;
    double eps = 1e-5;
    std::string gnorm = "two";
    int max_iters = 5000;
    bool dynamic_mm = true;
    double sigma1 = 1e-4;
    double sigma2 = 0.9;

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.bounds = {m, M};
        cfg.epsilon = eps;
        cfg.grad_norm_kind = gnorm == "inf" ? NormKind::Inf : NormKind::Two;
        cfg.max_iters = max_iters;
        cfg.dynamic_bounds = dynamic_mm;
        cfg.wolfe.sigma1 = sigma1;
        cfg.wolfe.sigma2 = sigma2;
        return cfg;
    }
};

void add_solver_flags(CLI::App &cmd, SolverFlags &f) {
    cmd.add_option("--m", f.m, "Nominal lower curvature bound")
        ->capture_default_str();
    cmd.add_option("--M", f.M, "Nominal upper curvature bound")
        ->capture_default_str();
    cmd.add_option("--eps", f.eps, "Gradient-norm tolerance")
        ->capture_default_str();
    cmd.add_option("--gnorm", f.gnorm, "Gradient norm for the stopping test")
        ->check(CLI::IsMember({"two", "inf"}))
        ->capture_default_str();
    cmd.add_option("--max-iters", f.max_iters, "Iteration limit")
        ->capture_default_str();
    cmd.add_flag("--dynamic-mm,!--no-dynamic-mm", f.dynamic_mm,
                 "Adjust (m, M) every iteration (default on)");
    cmd.add_option("--sigma1", f.sigma1, "Sufficient-decrease constant")
        ->capture_default_str();
    cmd.add_option("--sigma2", f.sigma2, "Curvature constant")
        ->capture_default_str();
}

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}};

std::vector<Mode> parse_algos(const std::vector<std::string> &names) {
    std::vector<Mode> out;
    for (const auto &n : names) {
        const auto mode = parse_mode(n);
        if (!mode) {
            throw Error(ErrorCode::Usage, "unknown algorithm '" + n + "'");
        }
        if (std::find(out.begin(), out.end(), *mode) == out.end()) {
            out.push_back(*mode);
        }
    }
    return out;
}

bool all_converged(const std::vector<BenchRow> &rows) {
    return std::all_of(rows.begin(), rows.end(), [](const BenchRow &r) {
        return r.status == SolveStatus::Converged;
    });
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Modified BFGS solver and benchmark harness", "mbfgs"};
    app.require_subcommand(1);

    // run
    auto *run = app.add_subcommand("run", "Solve one problem");
    SolverFlags run_flags;
    std::string run_problem;
    std::string run_algo = "modified";
    std::string run_format = "table";
    std::string run_trace;
    run->add_option("--problem", run_problem, "Problem name")->required();
    run->add_option("--algo", run_algo, "modified | bfgs | steepest")
        ->check(CLI::IsMember({"modified", "bfgs", "steepest"}))
        ->capture_default_str();
    run->add_option("--format", run_format, "csv | table")
        ->check(CLI::IsMember({"csv", "table"}))
        ->capture_default_str();
    run->add_option("--trace", run_trace, "Write the iteration trace here");
    add_solver_flags(*run, run_flags);

    // bench
    auto *bench = app.add_subcommand("bench", "Run the problem suite");
    SolverFlags bench_flags;
    std::string bench_problem = "*";
    std::vector<std::string> bench_algos{"modified"};
    std::string bench_format = "csv";
    std::string bench_trace;
    int jobs = 1;
    bench->add_option("--problem", bench_problem, "Shell pattern on names")
        ->capture_default_str();
    bench->add_option("--algo", bench_algos, "One or more algorithms")
        ->delimiter(',')
        ->check(CLI::IsMember({"modified", "bfgs", "steepest"}))
        ->capture_default_str();
    bench->add_option("--format", bench_format, "csv | table")
        ->check(CLI::IsMember({"csv", "table"}))
        ->capture_default_str();
    bench->add_option("--trace", bench_trace,
                      "Directory for per-run trace files");
    bench->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_solver_flags(*bench, bench_flags);

    // gradcheck
    auto *gradcheck =
        app.add_subcommand("gradcheck", "Analytic vs finite-difference check");
    std::string gc_problem = "*";
    unsigned seed = 1;
    int perturbations = 10;
    gradcheck->add_option("--problem", gc_problem, "Shell pattern on names")
        ->capture_default_str();
    gradcheck->add_option("--seed", seed, "Seed for the perturbed points")
        ->capture_default_str();
    gradcheck->add_option("--points", perturbations,
                          "Perturbed points per problem")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run) {
            const ProblemSpec &problem = lookup(run_problem);
            SolverConfig cfg = run_flags.config();
            cfg.mode = *parse_mode(run_algo);
            validate(cfg);
            const auto t0 = std::chrono::steady_clock::now();
            const SolveReport report =
                solve(problem.objective, problem.start, cfg);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            const std::vector<BenchRow> rows{
                make_row(problem, cfg.mode, report, ms)};
            out << emit(rows, kFormats.at(run_format));
            if (!run_trace.empty()) {
                std::ofstream trace(run_trace);
                if (!trace) {
                    err << "cannot write trace to " << run_trace << '\n';
                    return kExitUsage;
                }
                trace << format_trace(report);
            }
            return all_converged(rows) ? kExitOk : kExitNotConverged;
        }
        if (*bench) {
            BenchOptions options;
            options.jobs = jobs;
            if (!bench_trace.empty()) {
                options.trace_dir = bench_trace;
            }
            const auto rows = run_bench(bench_problem, parse_algos(bench_algos),
                                        bench_flags.config(), options);
            out << emit(rows, kFormats.at(bench_format));
            return all_converged(rows) ? kExitOk : kExitNotConverged;
        }
        if (*gradcheck) {
            const auto problems = match_problems(gc_problem);
            if (problems.empty()) {
                throw Error(ErrorCode::Usage,
                            "no problem matches '" + gc_problem + "'");
            }
            bool ok = true;
            out << "problem,n,points,worst_error,status\n";
            for (const auto *p : problems) {
                const auto r = check_gradient(*p, seed, perturbations);
                ok = ok && r.passed;
                out << r.problem << ',' << p->dimension << ',' << r.points
                    << ',' << format_real(r.worst_error) << ','
                    << (r.passed ? "PASS" : "FAIL") << '\n';
            }
            return ok ? kExitOk : kExitNotConverged;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::Usage || e.code() == ErrorCode::NotFound) {
            return kExitUsage;
        }
        return kExitNotConverged;
    }
    return kExitUsage;
}

} // namespace mbfgs
