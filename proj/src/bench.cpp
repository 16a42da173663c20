#include "mbfgs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fnmatch.h>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace mbfgs {

std::vector<const ProblemSpec *> match_problems(const std::string &pattern) {
    std::vector<const ProblemSpec *> out;
    for (const auto &p : registry()) {
        if (::fnmatch(pattern.c_str(), p.name.c_str(), 0) == 0) {
            out.push_back(&p);
        }
    }
    return out;
}

BenchRow make_row(const ProblemSpec &problem, Mode algo,
                  const SolveReport &report, double wall_time_ms) {
    BenchRow row;
    row.problem = problem.name;
    row.n = problem.dimension;
    row.algo = algo;
    row.iters = report.iters;
    row.f_evals = report.f_evals;
    row.g_evals = report.g_evals;
    row.final_f = report.f_final;
    row.final_gnorm = report.gnorm_final;
    row.status = report.status;
    row.gamma_zero_fraction = report.gamma_zero_fraction;
    row.wall_time_ms = wall_time_ms;
    return row;
}

std::vector<BenchRow> run_bench(const std::string &problem_filter,
                                const std::vector<Mode> &algos,
                                const SolverConfig &cfg,
                                const BenchOptions &options) {
    validate(cfg);
    const auto problems = match_problems(problem_filter);
    if (problems.empty()) {
        throw Error(ErrorCode::Usage,
                    "no problem matches '" + problem_filter + "'");
    }
    if (algos.empty()) {
        throw Error(ErrorCode::Usage, "no algorithm selected");
    }
    if (options.trace_dir) {
        std::filesystem::create_directories(*options.trace_dir);
    }

    struct Task {
        const ProblemSpec *problem;
        Mode algo;
    };
    std::vector<Task> tasks;
    for (const auto *p : problems) {
        for (Mode m : algos) {
            tasks.push_back({p, m});
        }
    }

    std::vector<BenchRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task &task = tasks[i];
            SolverConfig run_cfg = cfg;
            run_cfg.mode = task.algo;
            const auto t0 = std::chrono::steady_clock::now();
            const SolveReport report =
                solve(task.problem->objective, task.problem->start, run_cfg);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows[i] = make_row(*task.problem, task.algo, report, ms);
            if (options.trace_dir) {
                std::ofstream out(*options.trace_dir /
                                  (task.problem->name + "_" +
                                   short_name(task.algo) + ".csv"));
                out << format_trace(report);
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    std::sort(rows.begin(), rows.end(),
              [](const BenchRow &a, const BenchRow &b) {
                  if (a.problem != b.problem) {
                      return a.problem < b.problem;
                  }
                  return std::string(short_name(a.algo)) <
                         std::string(short_name(b.algo));
              });
    return rows;
}

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const double a = std::abs(v);
    if (a < 1e-3 || a >= 1e6) {
        std::snprintf(buf, sizeof buf, "%.5e", v);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%#.6g", v);
    std::string s = buf;
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    return s;
}

namespace {

std::vector<std::string> row_fields(const BenchRow &r) {
    return {r.problem,
            std::to_string(r.n),
            short_name(r.algo),
            std::to_string(r.iters),
            std::to_string(r.f_evals),
            std::to_string(r.g_evals),
            format_real(r.final_f),
            format_real(r.final_gnorm),
            to_string(r.status),
            format_real(r.gamma_zero_fraction),
            format_real(r.wall_time_ms)};
}

std::vector<std::string> split_header() {
    std::vector<std::string> out;
    std::stringstream ss(kCsvHeader);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(item);
    }
    return out;
}

} // namespace

std::string emit(const std::vector<BenchRow> &rows, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << kCsvHeader << '\n';
        for (const auto &r : rows) {
            const auto fields = row_fields(r);
            for (std::size_t i = 0; i < fields.size(); ++i) {
                out << (i ? "," : "") << fields[i];
            }
            out << '\n';
        }
        return out.str();
    }

    std::vector<std::vector<std::string>> table;
    table.push_back(split_header());
    for (const auto &r : rows) {
        table.push_back(row_fields(r));
    }
    std::vector<std::size_t> width(table.front().size(), 0);
    for (const auto &line : table) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    for (const auto &line : table) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            // names left-aligned, numbers right-aligned
            const bool left = i == 0 || i == 2 || i == 8;
            const std::string pad(width[i] - line[i].size(), ' ');
            if (i) {
                out << "  ";
            }
            out << (left ? line[i] + pad : pad + line[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_trace(const SolveReport &report) {
    std::ostringstream out;
    out << kTraceHeader << '\n';
    for (const auto &rec : report.trace) {
        out << rec.k << ',' << format_real(rec.f) << ','
            << format_real(rec.gnorm) << ',' << format_real(rec.alpha) << ','
            << format_real(rec.gamma) << ',' << format_real(rec.cos_theta)
            << '\n';
    }
    return out.str();
}

GradCheckResult check_gradient(const ProblemSpec &problem, unsigned seed,
                               int perturbations, double tolerance) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GradCheckResult result;
    result.problem = problem.name;
    for (int p = 0; p <= perturbations; ++p) {
        Vector x = problem.start;
        if (p > 0) {
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] += 0.1 * (1.0 + std::abs(problem.start[i])) * unit(rng);
            }
        }
        const Vector g = problem.objective.gradient(x);
        const Vector fd = fd_gradient(problem.objective, x, 1e-6);
        const double err = (g - fd).norm() / (1.0 + g.norm());
        result.worst_error = std::max(result.worst_error, err);
        ++result.points;
    }
    result.passed = result.worst_error <= tolerance;
    return result;
}

} // namespace mbfgs
