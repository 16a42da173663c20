#include "mbfgs/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace mbfgs {

namespace {

struct Sample {
    double alpha;
    Vector x;
    double f;
    Vector g;
};

} // namespace

bool WolfeParams::valid() const {
    return sigma1 > 0.0 && sigma1 < sigma2 && sigma2 < 1.0 &&
           alpha_init > 0.0 && max_trials >= 1 && alpha_max >= alpha_init;
}

const char *to_string(StepStatus s) {
    switch (s) {
    case StepStatus::Ok:
        return "OK";
    case StepStatus::MaxTrials:
        return "MAX_TRIALS";
    case StepStatus::NumericalStall:
        return "NUMERICAL_STALL";
    }
    return "UNKNOWN";
}

StepResult wolfe_search(const Objective &obj, const Vector &x, double f0,
                        const Vector &g0, const Vector &d,
                        const WolfeParams &params) {
    if (!params.valid()) {
        throw Error(ErrorCode::Usage,
                    "wolfe_search: need 0 < sigma1 < sigma2 < 1, "
                    "0 < alpha_init <= alpha_max, max_trials >= 1");
    }
    if (x.size() != d.size() || g0.size() != d.size()) {
        throw Error(ErrorCode::Usage, "wolfe_search: dimension mismatch");
    }
    const double dg0 = g0.dot(d);
    if (!(dg0 < 0.0)) {
        throw Error(ErrorCode::NotDescent,
                    "wolfe_search: direction is not a descent direction");
    }

    StepResult result;
    result.x_new = x;
    result.f_new = f0;
    result.g_new = g0;

    constexpr double inf = std::numeric_limits<double>::infinity();
    double lo = 0.0;
    double f_lo = f0;
    double dg_lo = dg0;
    double hi = inf;
    double f_hi = inf;

    std::optional<Sample> best;
    bool any_finite = false;
    bool collapsed = false;
    double alpha = params.alpha_init;

    for (int trial = 0; trial < params.max_trials; ++trial) {
        Vector xt = x + alpha * d;
        const double ft = obj.value(xt);
        ++result.f_evals;

        bool armijo = std::isfinite(ft) &&
                      ft <= f0 + params.sigma1 * alpha * dg0 && ft < f0;
        if (std::isfinite(ft)) {
            any_finite = true;
        }
        if (armijo) {
            Vector gt = obj.gradient(xt);
            ++result.g_evals;
            if (!gt.allFinite()) {
                armijo = false;
            } else {
                const double dgt = gt.dot(d);
                if (dgt >= params.sigma2 * dg0) {
                    result.alpha = alpha;
                    result.x_new = std::move(xt);
                    result.f_new = ft;
                    result.g_new = std::move(gt);
                    result.status = StepStatus::Ok;
                    return result;
                }
                if (!best || ft < best->f) {
                    best = Sample{alpha, xt, ft, gt};
                }
                lo = alpha;
                f_lo = ft;
                dg_lo = dgt;
            }
        }
        if (!armijo) {
            hi = alpha;
            f_hi = std::isfinite(ft) ? ft : inf;
        }

        if (hi == inf) {
            if (lo >= params.alpha_max) {
                break;
            }
            alpha = std::min(2.0 * lo, params.alpha_max);
            continue;
        }

        const double width = hi - lo;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            collapsed = true;
            break;
        }
        double next = lo + 0.5 * width;
        if (std::isfinite(f_hi)) {
            const double curv = f_hi - f_lo - dg_lo * width;
            if (curv > 0.0) {
                next = lo - dg_lo * width * width / (2.0 * curv);
            }
        }
        if (!std::isfinite(next)) {
            next = lo + 0.5 * width;
        }
        alpha = std::clamp(next, lo + 0.1 * width, hi - 0.1 * width);
    }

    result.status = (collapsed || !any_finite) ? StepStatus::NumericalStall
                                               : StepStatus::MaxTrials;
    if (best) {
        result.fallback = true;
        result.alpha = best->alpha;
        result.x_new = std::move(best->x);
        result.f_new = best->f;
        result.g_new = std::move(best->g);
    }
    return result;
}

} // namespace mbfgs
