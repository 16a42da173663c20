#include "mbfgs/solver.hpp"

#include <cmath>

namespace mbfgs {

const char *to_string(Mode m) {
    switch (m) {
    case Mode::Modified:
        return "MODIFIED";
    case Mode::BfgsFixed:
        return "BFGS_FIXED";
    case Mode::Steepest:
        return "STEEPEST";
    }
    return "UNKNOWN";
}

const char *short_name(Mode m) {
    switch (m) {
    case Mode::Modified:
        return "modified";
    case Mode::BfgsFixed:
        return "bfgs";
    case Mode::Steepest:
        return "steepest";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(const std::string &name) {
    if (name == "modified") {
        return Mode::Modified;
    }
    if (name == "bfgs") {
        return Mode::BfgsFixed;
    }
    if (name == "steepest") {
        return Mode::Steepest;
    }
    return std::nullopt;
}

const char *to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Converged:
        return "CONVERGED";
    case SolveStatus::MaxIters:
        return "MAX_ITERS";
    case SolveStatus::LinesearchFail:
        return "LINESEARCH_FAIL";
    case SolveStatus::NumericalFail:
        return "NUMERICAL_FAIL";
    }
    return "UNKNOWN";
}

void validate(const SolverConfig &cfg) {
    checked_bounds(cfg.bounds);
    if (!(cfg.epsilon > 0.0)) {
        throw Error(ErrorCode::Usage, "epsilon must be positive");
    }
    if (!(cfg.d_cap > 0.0)) {
        throw Error(ErrorCode::Usage, "direction cap must be positive");
    }
    if (cfg.max_iters < 1) {
        throw Error(ErrorCode::Usage, "max_iters must be at least 1");
    }
    if (!cfg.wolfe.valid()) {
        throw Error(ErrorCode::Usage, "invalid Wolfe parameters");
    }
}

Vector direction(const Matrix &inverse_estimate, const Vector &g,
                 double d_cap) {
    if (inverse_estimate.rows() != g.size() ||
        inverse_estimate.cols() != g.size()) {
        throw Error(ErrorCode::Usage, "direction: dimension mismatch");
    }
    Vector d = -(inverse_estimate * g);
    if (!d.allFinite()) {
        throw Error(ErrorCode::Evaluation, "direction: non-finite product");
    }
    const double norm = d.norm();
    if (norm > d_cap) {
        d *= d_cap / norm;
    }
    return d;
}

std::optional<Matrix> update_inverse(const Matrix &inverse_estimate,
                                     const Vector &s, const Vector &z) {
    const double zs = dot(z, s);
    if (!(zs > 1e-13 * z.norm() * s.norm())) {
        return std::nullopt;
    }
    const double rho = 1.0 / zs;
    // E (I - rho z s')
    Matrix right = inverse_estimate;
    right.noalias() -= rho * (inverse_estimate * z) * s.transpose();
    // (I - rho s z') [E (I - rho z s')]
    Matrix updated = right;
    updated.noalias() -= rho * s * (z.transpose() * right);
    updated.noalias() += rho * s * s.transpose();
    Matrix sym = 0.5 * (updated + updated.transpose());
    return sym;
}

double cos_theta(const Vector &g, const Vector &d) {
    const double gn = g.norm();
    const double dn = d.norm();
    if (gn == 0.0 || dn == 0.0) {
        throw Error(ErrorCode::Usage, "cos_theta: zero vector");
    }
    return -dot(g, d) / (gn * dn);
}

double grad_norm(const Vector &g, NormKind kind) {
    return kind == NormKind::Inf ? g.lpNorm<Eigen::Infinity>() : g.norm();
}

SolveReport solve(const Objective &obj, const Vector &x0,
                  const SolverConfig &cfg, const IterationObserver &observer) {
    validate(cfg);
    if (x0.size() != obj.dimension()) {
        throw Error(ErrorCode::Usage, obj.name() + ": start point has wrong "
                                                   "dimension");
    }

    SolveReport report;
    Vector x = x0;
    double f = obj.value(x);
    Vector g = obj.gradient(x);
    report.f_evals = 1;
    report.g_evals = 1;

    const auto finish = [&](SolveStatus status) {
        report.status = status;
        report.x_final = x;
        report.f_final = f;
        report.gnorm_final = grad_norm(g, cfg.grad_norm_kind);
        report.iters = static_cast<int>(report.trace.size());
        int zeros = 0;
        for (const auto &rec : report.trace) {
            zeros += rec.gamma == 0.0 ? 1 : 0;
        }
        report.gamma_zero_fraction =
            report.trace.empty()
                ? 0.0
                : static_cast<double>(zeros) / report.trace.size();
        return report;
    };

    if (!std::isfinite(f) || !g.allFinite()) {
        return finish(SolveStatus::NumericalFail);
    }

    const Eigen::Index n = x.size();
    Matrix inv = Matrix::Identity(n, n);

    for (int k = 0;; ++k) {
        const double gnorm = grad_norm(g, cfg.grad_norm_kind);
        if (gnorm < cfg.epsilon) {
            return finish(SolveStatus::Converged);
        }
        if (k >= cfg.max_iters) {
            return finish(SolveStatus::MaxIters);
        }

        Vector d;
        try {
            d = direction(inv, g, cfg.d_cap);
        } catch (const Error &) {
            return finish(SolveStatus::NumericalFail);
        }
        if (!(g.dot(d) < 0.0)) {
            // Only reachable through rounding: restart from the identity.
            inv.setIdentity();
            d = direction(inv, g, cfg.d_cap);
        }

        const StepResult step = wolfe_search(obj, x, f, g, d, cfg.wolfe);
        report.f_evals += step.f_evals;
        report.g_evals += step.g_evals;
        if (!step.has_step()) {
            return finish(SolveStatus::LinesearchFail);
        }

        IterRecord rec;
        rec.k = k;
        rec.f = f;
        rec.gnorm = gnorm;
        rec.alpha = step.alpha;
        rec.cos_theta = cos_theta(g, d);
        rec.zoutendijk_term = rec.cos_theta * rec.cos_theta * g.squaredNorm();
        rec.f_evals = step.f_evals;
        rec.g_evals = step.g_evals;
        rec.fallback_step = step.fallback;
        rec.bounds = cfg.bounds;

        const Vector s = step.x_new - x;
        const Vector y = step.g_new - g;

        double gamma = 0.0;
        switch (cfg.mode) {
        case Mode::Modified: {
            if (cfg.dynamic_bounds) {
                const auto [bounds, decision] = adjust_bounds(s, y, cfg.bounds);
                gamma = decision.gamma;
                rec.gamma_case = decision.case_label;
                rec.bounds = bounds;
            } else {
                const GammaDecision decision = select_gamma(s, y, cfg.bounds);
                gamma = decision.gamma;
                rec.gamma_case = decision.case_label;
            }
            break;
        }
        case Mode::BfgsFixed:
            gamma = 0.0;
            break;
        case Mode::Steepest:
            gamma = 1.0;
            break;
        }
        rec.gamma = gamma;

        const Vector z = gamma * s + (1.0 - gamma) * y;
        std::optional<Matrix> next = update_inverse(inv, s, z);
        rec.update_skipped = !next.has_value();
        if (next) {
            inv = std::move(*next);
        }

        x = step.x_new;
        f = step.f_new;
        g = step.g_new;
        report.trace.push_back(rec);

        if (observer) {
            observer(IterationView{k, inv, s, z, !rec.update_skipped});
        }
    }
}

} // namespace mbfgs
