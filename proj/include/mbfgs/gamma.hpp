#ifndef MBFGS_GAMMA_HPP
#define MBFGS_GAMMA_HPP

#include "mbfgs/core.hpp"

#include <utility>

namespace mbfgs {

/// Curvature bounds (m, M) with 0 < m < 1 < M.
struct CurvatureBounds {
    double m = 1e-5;
    double M = 1e5;

    bool valid() const { return m > 0.0 && m < 1.0 && M > 1.0; }
};

/// Throws ErrorCode::Usage unless 0 < m < 1 < M.
CurvatureBounds checked_bounds(CurvatureBounds bounds);

enum class GammaCase {
    YBelowMs,     ///< y's < m s's
    MsBelowY,     ///< m s's <= y's
    SEqY,         ///< s == y
    ShortcutZero, ///< m s's <= y's and y'y <= M y's
};

const char *to_string(GammaCase c);

struct GammaDecision {
    double gamma = 0.0;           ///< selected value, clamped to [0,1]
    double unclamped_gamma = 0.0; ///< value before the clamp
    double check_gamma = 0.0;     ///< lower bound from z's >= m s's
    double lower_gamma = 0.0;     ///< smaller root of p(gamma)
    GammaCase case_label = GammaCase::MsBelowY;
    CurvatureBounds effective_bounds;
};

/// (m s's - y's) / (s's - y's). Throws DegenerateDenominator when s's ~= y's.
double check_gamma(const Vector &s, const Vector &y,
                   const CurvatureBounds &bounds);

/**
 * Smaller root of
 *   p(g) = g^2 (s-y)'(s-y) + g (s-y)'(2y - Ms) + y'(y - Ms),
 * the quadratic whose sublevel set {p <= 0} is where z'z <= M z's holds for
 * z = g s + (1-g) y.
 *
 * The discriminant is evaluated as
 *   (M s'(s-y))^2 + 4(M-1)(s's y'y - (y's)^2),
 * which is a sum of non-negative terms (Cauchy-Schwarz), and any negative
 * rounding residue is clamped to zero. Throws SEqualsY when s ~= y.
 */
double lower_gamma(const Vector &s, const Vector &y,
                   const CurvatureBounds &bounds);

/// Smallest admissible gamma in [0,1] for fixed bounds.
GammaDecision select_gamma(const Vector &s, const Vector &y,
                           const CurvatureBounds &bounds);

/**
 * Per-iteration bound adjustment followed by select_gamma.
 *
 * Starting from the nominal bounds:
 *  - if check_gamma > 1, M is raised to 1e4 * nominal M;
 *  - else if lower_gamma exceeds check_gamma by more than 0.2 (and is
 *    positive), both bounds are scaled by 1e3;
 *  - else if check_gamma exceeds lower_gamma by more than 0.2 (and is
 *    positive), both bounds are scaled by 1e-2.
 * A scaled pair that would leave 0 < m < 1 < M is not applied.
 */
std::pair<CurvatureBounds, GammaDecision>
adjust_bounds(const Vector &s, const Vector &y, const CurvatureBounds &nominal);

namespace detail {

/// |s-y| <= 1e-12 (|s| + |y|).
bool s_equals_y(const Vector &s, const Vector &y);

/// |s's - y's| <= 1e-12 s's.
bool degenerate_check_denominator(const Vector &s, const Vector &y);

} // namespace detail

} // namespace mbfgs

#endif // MBFGS_GAMMA_HPP
