#ifndef MBFGS_LINE_SEARCH_HPP
#define MBFGS_LINE_SEARCH_HPP

#include "mbfgs/core.hpp"

namespace mbfgs {

struct WolfeParams {
    double sigma1 = 1e-4; ///< sufficient decrease
    double sigma2 = 0.9;  ///< curvature
    double alpha_init = 1.0;
    int max_trials = 60;
    double alpha_max = 1e10;

    bool valid() const;
};

enum class StepStatus { Ok, MaxTrials, NumericalStall };

const char *to_string(StepStatus s);

struct StepResult {
    double alpha = 0.0;
    Vector x_new;
    double f_new = 0.0;
    Vector g_new;
    int f_evals = 0;
    int g_evals = 0;
    StepStatus status = StepStatus::Ok;
    /// True when status != Ok but x_new is the best sufficient-decrease
    /// point seen during the search (its curvature test failed).
    bool fallback = false;

    bool has_step() const { return status == StepStatus::Ok || fallback; }
};

/**
 * Weak Wolfe line search along a descent direction.
 *
 * Accepts alpha with
 *   f(x + alpha d) <= f0 + sigma1 alpha g0'd   and   f(x + alpha d) < f0,
 *   d' g(x + alpha d) >= sigma2 g0'd.
 *
 * The trial step doubles until the sufficient-decrease test fails or the
 * curvature test holds. Once an upper end is known the bracket [lo, hi] keeps
 * lo sufficient-decrease-but-too-steep and hi sufficient-decrease-failing,
 * and the next trial is the minimiser of the quadratic through f(lo), f'(lo),
 * f(hi), kept at least 10% of the bracket away from either end.
 *
 * Non-finite trial values count as sufficient-decrease failures.
 * Throws ErrorCode::NotDescent when g0'd >= 0.
 */
StepResult wolfe_search(const Objective &obj, const Vector &x, double f0,
                        const Vector &g0, const Vector &d,
                        const WolfeParams &params = {});

} // namespace mbfgs

#endif // MBFGS_LINE_SEARCH_HPP
