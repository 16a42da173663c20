// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "mbfgs/bench.hpp"
#include "mbfgs/gamma.hpp"
#include "mbfgs/problems.hpp"
#include "mbfgs/reference_updates.hpp"
#include "mbfgs/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mbfgs;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) { return format_real(v); }

struct Anchor {
    const char *problem;
    double max_f;
    int max_iters;
};

Outcome solve_anchor(const Anchor &a, double max_ms = -1.0) {
    const ProblemSpec &p = lookup(a.problem);
    const auto t0 = Clock::now();
    const SolveReport r = solve(p.objective, p.start, SolverConfig{});
    const double ms = ms_since(t0);
    const bool pass = r.status == SolveStatus::Converged &&
                      r.f_final <= a.max_f && r.iters <= a.max_iters &&
                      (max_ms < 0 || ms < max_ms);
    std::ostringstream d;
    d << a.problem << "(" << p.dimension << ") " << to_string(r.status)
      << " iters=" << r.iters << " (limit " << a.max_iters
      << ") f=" << fmt(r.f_final) << " (limit " << fmt(a.max_f)
      << ") gnorm=" << fmt(r.gnorm_final) << " time=" << fmt(ms) << "ms";
    return {pass, d.str()};
}

Matrix random_spd(std::mt19937_64 &rng, Eigen::Index n, double cond) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> e(0.0, 1.0);
    Matrix B(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            B(i, j) = u(rng);
        }
    }
    const Matrix Q = Eigen::HouseholderQR<Matrix>(B).householderQ();
    Vector lambda(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lambda[i] = std::pow(cond, e(rng));
    }
    return Q * lambda.asDiagonal() * Q.transpose();
}

Outcome gamma_constraints() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    const double m = 0.5, M = 2.0;
    int bad = 0, tried = 0;
    while (tried < 10000) {
        const Eigen::Index n = 1 + tried % 8;
        Vector s(n), y(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            s[i] = u(rng);
            y[i] = u(rng);
        }
        if (s.squaredNorm() == 0.0) {
            continue;
        }
        ++tried;
        const double g = select_gamma(s, y, {m, M}).gamma;
        const Vector z = g * s + (1.0 - g) * y;
        const double ss = s.dot(s), zs = z.dot(s), zz = z.dot(z);
        const bool ok = g >= 0.0 && g <= 1.0 && zs >= m * ss - 1e-9 * ss &&
                        zz <= M * zs + 1e-9 * std::max(1.0, zz);
        bad += ok ? 0 : 1;
    }
    const double ms = ms_since(t0);
    std::ostringstream d;
    d << tried << " pairs, " << bad << " violations, time=" << fmt(ms) << "ms";
    return {bad == 0 && ms < 1000.0, d.str()};
}

Outcome update_equivalence() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> lc(0.0, 4.0);
    double worst_product = 0.0, worst_forms = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        // condition number below 1e4
        const Matrix E = random_spd(rng, n, std::pow(10.0, lc(rng)) * 0.999);
        Vector s(n), z(n);
        do {
            for (Eigen::Index i = 0; i < n; ++i) {
                s[i] = u(rng);
                z[i] = u(rng);
            }
        } while (z.dot(s) <= 0.05 * z.norm() * s.norm());
        const Matrix Einv = E.inverse();
        const Matrix direct = reference::update_direct(E, s, z);
        const auto inv = update_inverse(Einv, s, z);
        if (!inv) {
            return {false, "update skipped on a valid pair"};
        }
        const Matrix I = Matrix::Identity(n, n);
        worst_product = std::max(worst_product, (direct * *inv - I).norm());
        const Matrix fast = reference::update_inverse_unstable(Einv, s, z);
        worst_forms =
            std::max(worst_forms, (fast - *inv).norm() / inv->norm());
    }
    std::ostringstream d;
    d << "1000 cases: |direct*inverse - I| max " << fmt(worst_product)
      << " (limit 1e-6), stable vs expanded max rel " << fmt(worst_forms)
      << " (limit 1e-8)";
    return {worst_product <= 1e-6 && worst_forms <= 1e-8, d.str()};
}

Outcome spd_preservation(const std::vector<std::string> &problems) {
    int runs = 0, updates = 0, not_spd = 0;
    double worst_secant = 0.0;
    std::string first_bad;
    for (const auto &name : problems) {
        const ProblemSpec &p = lookup(name);
        const auto observer = [&](const IterationView &v) {
            if (Eigen::LLT<Matrix>(v.inverse_estimate).info() !=
                Eigen::Success) {
                ++not_spd;
                if (first_bad.empty()) {
                    first_bad = name + " k=" + std::to_string(v.k);
                }
            }
            if (v.updated) {
                ++updates;
                worst_secant =
                    std::max(worst_secant,
                             (v.inverse_estimate * v.z - v.s).norm() /
                                 v.s.norm());
            }
        };
        solve(p.objective, p.start, SolverConfig{}, observer);
        ++runs;
    }
    std::ostringstream d;
    d << runs << " runs, " << updates << " updates, " << not_spd
      << " non-SPD estimates" << (first_bad.empty() ? "" : " first at ")
      << first_bad << ", worst secant residual " << fmt(worst_secant)
      << " (limit 1e-8)";
    return {not_spd == 0 && worst_secant <= 1e-8, d.str()};
}

Outcome quadratic_reduction() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    const CurvatureBounds nominal = SolverConfig{}.bounds;
    int mismatched = 0, nonzero_gamma = 0, iterations = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index n = 2 + trial % 7;
        // spectrum in [1e-3, 1e3], inside (m, M)
        const Matrix A = random_spd(rng, n, 1e6) * 1e-3;
        const Eigen::SelfAdjointEigenSolver<Matrix> es(A);
        if (es.eigenvalues().minCoeff() < nominal.m ||
            es.eigenvalues().maxCoeff() > nominal.M) {
            return {false, "generated spectrum outside the bounds"};
        }
        const Objective obj(
            "quadratic", n, [A](const Vector &x) { return 0.5 * x.dot(A * x); },
            [A](const Vector &x) { return (A * x).eval(); });
        Vector x0(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            x0[i] = u(rng);
        }
        SolverConfig bfgs;
        bfgs.mode = Mode::BfgsFixed;
        const SolveReport a = solve(obj, x0, SolverConfig{});
        const SolveReport b = solve(obj, x0, bfgs);
        bool same = a.trace.size() == b.trace.size() && a.x_final == b.x_final;
        for (std::size_t k = 0; same && k < a.trace.size(); ++k) {
            same = a.trace[k].f == b.trace[k].f &&
                   a.trace[k].gnorm == b.trace[k].gnorm &&
                   a.trace[k].alpha == b.trace[k].alpha &&
                   a.trace[k].cos_theta == b.trace[k].cos_theta;
        }
        for (const auto &rec : a.trace) {
            nonzero_gamma += rec.gamma == 0.0 ? 0 : 1;
        }
        iterations += static_cast<int>(a.trace.size());
        mismatched += same ? 0 : 1;
    }
    std::ostringstream d;
    d << "10 quadratics, " << iterations << " iterations, " << mismatched
      << " trace mismatches, " << nonzero_gamma << " nonzero gamma";
    return {mismatched == 0 && nonzero_gamma == 0, d.str()};
}

Outcome gradient_gate() {
    int failed = 0;
    std::string names;
    double worst = 0.0;
    for (const auto &p : registry()) {
        const GradCheckResult r = check_gradient(p, 1, 10, 1e-5);
        worst = std::max(worst, r.worst_error);
        if (!r.passed) {
            ++failed;
            names += " " + p.name + "(" + fmt(r.worst_error) + ")";
        }
    }
    std::ostringstream d;
    d << registry().size() << " problems x 11 points, " << failed
      << " failing" << (failed ? ":" : "") << names;
    return {failed == 0, d.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, [] { return solve_anchor({"rosenbr", 1e-10, 96}, 1000.0); }},
        {2, [] { return solve_anchor({"beale", 1e-8, 39}); }},
        {3, [] { return solve_anchor({"cube", 1e-12, 63}); }},
        {4, [] { return solve_anchor({"sineval", 1e-10, 204}); }},
        {5, [] { return solve_anchor({"brownbs", 1e-10, 2000}); }},
        {6, [] { return solve_anchor({"vardim", 1e-12, 63}); }},
        {7,
         [] {
             Outcome o = solve_anchor({"chnrosnb", 1e-10, 474});
             SolverConfig bfgs;
             bfgs.mode = Mode::BfgsFixed;
             const ProblemSpec &p = lookup("chnrosnb");
             const SolveReport r = solve(p.objective, p.start, bfgs);
             o.detail += "; bfgs baseline " + std::string(to_string(r.status)) +
                         " f=" + fmt(r.f_final) + " (informational)";
             return o;
         }},
        {8, gamma_constraints},
        {9, update_equivalence},
        {10,
         [] {
             return spd_preservation({"rosenbr", "beale", "cube", "sineval",
                                      "brownbs", "vardim", "chnrosnb"});
         }},
        {11, quadratic_reduction},
        {12, gradient_gate},
    };

    int failures = 0;
    for (const auto &[id, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2d: %s  %s\n", id, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
