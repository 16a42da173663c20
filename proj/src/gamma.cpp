#include "mbfgs/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mbfgs {

namespace {

constexpr double kEqualityTol = 1e-12;

// Lower bound on gamma from the first curvature inequality; a vanishing
// denominator leaves every gamma admissible, so the bound drops to 0.
double effective_check(const Vector &s, const Vector &y,
                       const CurvatureBounds &b) {
    if (detail::degenerate_check_denominator(s, y)) {
        return 0.0;
    }
    return check_gamma(s, y, b);
}

// s == y satisfies the second inequality at gamma = 0, so the root lies
// strictly below zero.
double effective_lower(const Vector &s, const Vector &y,
                       const CurvatureBounds &b) {
    if (detail::s_equals_y(s, y)) {
        return -std::numeric_limits<double>::infinity();
    }
    return lower_gamma(s, y, b);
}

} // namespace

namespace detail {

bool s_equals_y(const Vector &s, const Vector &y) {
    return (s - y).norm() <= kEqualityTol * (s.norm() + y.norm());
}

bool degenerate_check_denominator(const Vector &s, const Vector &y) {
    const double ss = s.squaredNorm();
    return std::abs(ss - y.dot(s)) <= kEqualityTol * ss;
}

} // namespace detail

CurvatureBounds checked_bounds(CurvatureBounds bounds) {
    if (!bounds.valid()) {
        throw Error(ErrorCode::Usage,
                    "curvature bounds must satisfy 0 < m < 1 < M");
    }
    return bounds;
}

const char *to_string(GammaCase c) {
    switch (c) {
    case GammaCase::YBelowMs:
        return "Y_BELOW_MS";
    case GammaCase::MsBelowY:
        return "MS_BELOW_Y";
    case GammaCase::SEqY:
        return "S_EQ_Y";
    case GammaCase::ShortcutZero:
        return "SHORTCUT_ZERO";
    }
    return "UNKNOWN";
}

double check_gamma(const Vector &s, const Vector &y,
                   const CurvatureBounds &bounds) {
    const double ss = dot(s, s);
    const double ys = dot(y, s);
    if (std::abs(ss - ys) <= kEqualityTol * ss) {
        throw Error(ErrorCode::DegenerateDenominator,
                    "check_gamma: s's equals y's");
    }
    return (bounds.m * ss - ys) / (ss - ys);
}

double lower_gamma(const Vector &s, const Vector &y,
                   const CurvatureBounds &bounds) {
    if (s.size() != y.size()) {
        throw Error(ErrorCode::Usage, "lower_gamma: dimension mismatch");
    }
    if (detail::s_equals_y(s, y)) {
        throw Error(ErrorCode::SEqualsY, "lower_gamma: s equals y");
    }
    const double M = bounds.M;
    const Vector diff = s - y;
    const double a = diff.squaredNorm();
    const double b = diff.dot(M * s - 2.0 * y);
    const double c = y.dot(y - M * s);

    const double ss = s.squaredNorm();
    const double yy = y.squaredNorm();
    const double ys = y.dot(s);
    const double lead = M * s.dot(diff);
    const double gram = std::max(0.0, ss * yy - ys * ys);
    const double radicand = std::max(0.0, lead * lead + 4.0 * (M - 1.0) * gram);
    const double root = std::sqrt(radicand);

    // Same root written through the product of the roots (c / a) when the
    // difference b - root would cancel.
    if (b > 0.0) {
        return 2.0 * c / (b + root);
    }
    return (b - root) / (2.0 * a);
}

GammaDecision select_gamma(const Vector &s, const Vector &y,
                           const CurvatureBounds &bounds) {
    if (s.size() != y.size()) {
        throw Error(ErrorCode::Usage, "select_gamma: dimension mismatch");
    }
    if (s.squaredNorm() == 0.0) {
        throw Error(ErrorCode::Usage, "select_gamma: zero step");
    }
    GammaDecision d;
    d.effective_bounds = bounds;
    d.check_gamma = effective_check(s, y, bounds);
    d.lower_gamma = effective_lower(s, y, bounds);

    const double ss = s.squaredNorm();
    const double ys = y.dot(s);
    const double yy = y.squaredNorm();

    if (detail::s_equals_y(s, y)) {
        d.case_label = GammaCase::SEqY;
        d.unclamped_gamma = 0.0;
    } else if (bounds.m * ss <= ys && yy <= bounds.M * ys) {
        d.case_label = GammaCase::ShortcutZero;
        d.unclamped_gamma = 0.0;
    } else if (bounds.m * ss > ys) {
        d.case_label = GammaCase::YBelowMs;
        d.unclamped_gamma = std::max(d.lower_gamma, d.check_gamma);
    } else {
        d.case_label = GammaCase::MsBelowY;
        d.unclamped_gamma = std::max(0.0, d.lower_gamma);
    }
    d.gamma = std::clamp(d.unclamped_gamma, 0.0, 1.0);
    return d;
}

std::pair<CurvatureBounds, GammaDecision>
adjust_bounds(const Vector &s, const Vector &y, const CurvatureBounds &nominal) {
    if (s.squaredNorm() == 0.0) {
        throw Error(ErrorCode::Usage, "adjust_bounds: zero step");
    }
    CurvatureBounds bounds = nominal;
    const auto try_set = [&bounds](CurvatureBounds candidate) {
        if (candidate.valid()) {
            bounds = candidate;
            return true;
        }
        return false;
    };

    const double cg = effective_check(s, y, bounds);
    if (cg > 1.0) {
        try_set({nominal.m, 1e4 * nominal.M});
    } else {
        const double lg = effective_lower(s, y, bounds);
        if (lg - cg > 0.2 && lg > 0.0) {
            try_set({1e3 * nominal.m, 1e3 * nominal.M});
        } else if (cg - lg > 0.2 && cg > 0.0) {
            try_set({1e-2 * nominal.m, 1e-2 * nominal.M});
        }
    }
    GammaDecision decision = select_gamma(s, y, bounds);
    return {bounds, decision};
}

} // namespace mbfgs
