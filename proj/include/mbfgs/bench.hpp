#ifndef MBFGS_BENCH_HPP
#define MBFGS_BENCH_HPP

#include "mbfgs/problems.hpp"
#include "mbfgs/solver.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mbfgs {

struct BenchRow {
    std::string problem;
    Eigen::Index n = 0;
    Mode algo = Mode::Modified;
    int iters = 0;
    int f_evals = 0;
    int g_evals = 0;
    double final_f = 0.0;
    double final_gnorm = 0.0;
    SolveStatus status = SolveStatus::MaxIters;
    double gamma_zero_fraction = 0.0;
    double wall_time_ms = 0.0;
};

struct BenchOptions {
    int jobs = 1;
    /// When set, one trace file per run is written here as
    /// <problem>_<algo>.csv.
    std::optional<std::filesystem::path> trace_dir;
};

enum class OutputFormat { Csv, Table };

/// Shell-style pattern (*, ?, [..]) matched against problem names.
std::vector<const ProblemSpec *> match_problems(const std::string &pattern);

/// Runs every (problem, algo) pair; rows sorted by problem then algo name.
/// Throws ErrorCode::Usage when the pattern matches nothing.
std::vector<BenchRow> run_bench(const std::string &problem_filter,
                                const std::vector<Mode> &algos,
                                const SolverConfig &cfg,
                                const BenchOptions &options = {});

BenchRow make_row(const ProblemSpec &problem, Mode algo,
                  const SolveReport &report, double wall_time_ms);

inline constexpr const char *kCsvHeader =
    "problem,n,algo,iters,f_evals,g_evals,final_f,final_gnorm,status,"
    "gamma_zero_fraction,wall_time_ms";

inline constexpr const char *kTraceHeader = "k,f,gnorm,alpha,gamma,cos_theta";

/// Six significant digits; scientific for |v| < 1e-3 or |v| >= 1e6.
std::string format_real(double v);

std::string emit(const std::vector<BenchRow> &rows, OutputFormat format);

/// Header line plus one "k,f,gnorm,alpha,gamma,cos_theta" line per iteration.
std::string format_trace(const SolveReport &report);

struct GradCheckResult {
    std::string problem;
    int points = 0;
    /// max over points of |g - g_fd| / (1 + |g|)
    double worst_error = 0.0;
    bool passed = false;
};

/// Compares the analytic gradient with central differences (h = 1e-6) at
/// the start point and `perturbations` random points in a box around it,
/// each coordinate moved by up to 0.1 (1 + |x_i|).
GradCheckResult check_gradient(const ProblemSpec &problem, unsigned seed,
                               int perturbations = 10,
                               double tolerance = 1e-5);

} // namespace mbfgs

#endif // MBFGS_BENCH_HPP
