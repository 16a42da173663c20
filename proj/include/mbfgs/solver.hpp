#ifndef MBFGS_SOLVER_HPP
#define MBFGS_SOLVER_HPP

#include "mbfgs/core.hpp"
#include "mbfgs/gamma.hpp"
#include "mbfgs/line_search.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mbfgs {

enum class NormKind { Two, Inf };

/// How gamma is chosen each iteration.
enum class Mode {
    Modified,  ///< closed-form gamma selection
    BfgsFixed, ///< gamma = 0, plain BFGS
    Steepest,  ///< gamma = 1
};

const char *to_string(Mode m);
/// "modified", "bfgs", "steepest"
const char *short_name(Mode m);
std::optional<Mode> parse_mode(const std::string &name);

struct SolverConfig {
    CurvatureBounds bounds{1e-5, 1e5};
    double epsilon = 1e-5;
    NormKind grad_norm_kind = NormKind::Two;
    WolfeParams wolfe;
    int max_iters = 5000;
    double d_cap = 1e6;
    bool dynamic_bounds = true;
    Mode mode = Mode::Modified;
};

/// Throws ErrorCode::Usage when a field is out of range.
void validate(const SolverConfig &cfg);

struct IterRecord {
    int k = 0;
    double f = 0.0;      ///< f(x_k)
    double gnorm = 0.0;  ///< |g(x_k)|
    double alpha = 0.0;
    double gamma = 0.0;
    double cos_theta = 0.0;
    double zoutendijk_term = 0.0; ///< cos^2(theta) |g|^2
    int f_evals = 0;
    int g_evals = 0;
    GammaCase gamma_case = GammaCase::ShortcutZero;
    CurvatureBounds bounds;
    bool update_skipped = false;
    bool fallback_step = false;
};

enum class SolveStatus { Converged, MaxIters, LinesearchFail, NumericalFail };

const char *to_string(SolveStatus s);

struct SolveReport {
    SolveStatus status = SolveStatus::MaxIters;
    Vector x_final;
    double f_final = 0.0;
    double gnorm_final = 0.0;
    int iters = 0;
    int f_evals = 0;
    int g_evals = 0;
    std::vector<IterRecord> trace;
    double gamma_zero_fraction = 0.0;
};

/// State exposed to an observer after every accepted step.
struct IterationView {
    int k;
    const Matrix &inverse_estimate; ///< after the update (or unchanged)
    const Vector &s;
    const Vector &z;
    bool updated;
};

using IterationObserver = std::function<void(const IterationView &)>;

/// -E_inv g, rescaled to norm d_cap when longer.
Vector direction(const Matrix &inverse_estimate, const Vector &g, double d_cap);

/**
 * Inverse update in product form,
 *   (I - s z'/z's) E (I - z s'/z's) + s s'/z's,
 * applied one factor at a time and symmetrised.
 *
 * Returns nullopt (skip) when z's <= 1e-13 |z| |s|.
 */
std::optional<Matrix> update_inverse(const Matrix &inverse_estimate,
                                     const Vector &s, const Vector &z);

/// -g'd / (|g| |d|)
double cos_theta(const Vector &g, const Vector &d);

double grad_norm(const Vector &g, NormKind kind);

SolveReport solve(const Objective &obj, const Vector &x0,
                  const SolverConfig &cfg,
                  const IterationObserver &observer = {});

} // namespace mbfgs

#endif // MBFGS_SOLVER_HPP
