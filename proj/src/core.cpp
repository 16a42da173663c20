#include "mbfgs/core.hpp"

#include <cmath>
#include <utility>

namespace mbfgs {

const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Usage:
        return "USAGE";
    case ErrorCode::Evaluation:
        return "EVALUATION";
    case ErrorCode::NotDescent:
        return "NOT_DESCENT";
    case ErrorCode::NotFound:
        return "NOT_FOUND";
    case ErrorCode::DegenerateDenominator:
        return "DEGENERATE_DENOMINATOR";
    case ErrorCode::SEqualsY:
        return "S_EQUALS_Y";
    case ErrorCode::LostDefiniteness:
        return "LOST_DEFINITENESS";
    }
    return "UNKNOWN";
}

bool all_finite(const Vector &v) { return v.allFinite(); }

Vector checked_vector(Vector v) {
    if (v.size() < 1) {
        throw Error(ErrorCode::Usage, "vector must have at least one entry");
    }
    if (!v.allFinite()) {
        throw Error(ErrorCode::Usage, "vector has non-finite entries");
    }
    return v;
}

double dot(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::Usage,
                    "dot: dimension mismatch (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
    }
    return a.dot(b);
}

Objective::Objective(std::string name, Eigen::Index dimension, ValueFn value,
                     GradientFn gradient)
    : name_(std::move(name)), dimension_(dimension), value_(std::move(value)),
      gradient_(std::move(gradient)) {
    if (dimension_ < 1) {
        throw Error(ErrorCode::Usage, "objective dimension must be positive");
    }
    if (!value_ || !gradient_) {
        throw Error(ErrorCode::Usage, "objective needs value and gradient");
    }
}

double Objective::value(const Vector &x) const {
    if (x.size() != dimension_) {
        throw Error(ErrorCode::Usage, name_ + ": expected dimension " +
                                          std::to_string(dimension_));
    }
    return value_(x);
}

Vector Objective::gradient(const Vector &x) const {
    if (x.size() != dimension_) {
        throw Error(ErrorCode::Usage, name_ + ": expected dimension " +
                                          std::to_string(dimension_));
    }
    Vector g = gradient_(x);
    if (g.size() != dimension_) {
        throw Error(ErrorCode::Evaluation,
                    name_ + ": gradient has wrong dimension");
    }
    return g;
}

Vector fd_gradient(const Objective &obj, const Vector &x, double h) {
    if (!(h > 0.0)) {
        throw Error(ErrorCode::Usage, "fd_gradient: step must be positive");
    }
    Vector g(x.size());
    Vector probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double fp = obj.value(probe);
        probe[i] = x[i] - h;
        const double fm = obj.value(probe);
        probe[i] = x[i];
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw Error(ErrorCode::Evaluation,
                        obj.name() + ": non-finite value probing coordinate " +
                            std::to_string(i));
        }
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

} // namespace mbfgs
