#ifndef MBFGS_CORE_HPP
#define MBFGS_CORE_HPP

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>

namespace mbfgs {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ErrorCode {
    Usage,
    Evaluation,
    NotDescent,
    NotFound,
    DegenerateDenominator,
    SEqualsY,
    LostDefiniteness,
};

const char *to_string(ErrorCode code);

/// Exception carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

bool all_finite(const Vector &v);

/// Throws ErrorCode::Usage when v is empty or holds NaN/Inf.
Vector checked_vector(Vector v);

double dot(const Vector &a, const Vector &b);

/**
 * A smooth function of n variables with an analytic gradient.
 *
 * Both callables must be deterministic and must not mutate shared state, so an
 * Objective may be evaluated from several threads at once.
 */
class Objective {
  public:
    using ValueFn = std::function<double(const Vector &)>;
    using GradientFn = std::function<Vector(const Vector &)>;

    Objective(std::string name, Eigen::Index dimension, ValueFn value,
              GradientFn gradient);

    const std::string &name() const { return name_; }
    Eigen::Index dimension() const { return dimension_; }

    double value(const Vector &x) const;
    Vector gradient(const Vector &x) const;

  private:
    std::string name_;
    Eigen::Index dimension_;
    ValueFn value_;
    GradientFn gradient_;
};

/// Central-difference gradient, (f(x+h e_i) - f(x-h e_i)) / 2h per coordinate.
Vector fd_gradient(const Objective &obj, const Vector &x, double h = 1e-6);

} // namespace mbfgs

#endif // MBFGS_CORE_HPP
