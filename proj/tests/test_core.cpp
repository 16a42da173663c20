#include <doctest.h>

#include "mbfgs/core.hpp"
#include "mbfgs/problems.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace mbfgs;

namespace {

Vector vec(std::initializer_list<double> v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        out[i++] = x;
    }
    return out;
}

Objective half_norm() {
    return Objective(
        "half_norm", 2, [](const Vector &x) { return 0.5 * x.squaredNorm(); },
        [](const Vector &x) { return x; });
}

} // namespace

TEST_CASE("dot examples") {
    CHECK(dot(vec({1, 0}), vec({0, 1})) == 0.0);
    CHECK(dot(vec({1, 2}), vec({3, 4})) == 11.0);
    CHECK(dot(vec({1, 0, 0}), vec({1, 0, 0})) == 1.0);
}

TEST_CASE("dot rejects mismatched dimensions") {
    try {
        dot(vec({1, 2}), vec({1, 2, 3}));
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Usage);
    }
}

TEST_CASE("dot is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + trial % 9;
        Vector a(n), b(n), c(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
            c[i] = u(rng);
        }
        const double alpha = u(rng);
        const double beta = u(rng);
        const double scale = 1.0 + a.norm() * (b.norm() + c.norm()) *
                                       (std::abs(alpha) + std::abs(beta));
        CHECK(std::abs(dot(a, b) - dot(b, a)) <= 1e-12 * scale);
        const double lhs = dot(a, alpha * b + beta * c);
        const double rhs = alpha * dot(a, b) + beta * dot(a, c);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
}

TEST_CASE("checked_vector rejects empty and non-finite input") {
    CHECK_THROWS_AS(checked_vector(Vector()), Error);
    CHECK_THROWS_AS(
        checked_vector(vec({1.0, std::numeric_limits<double>::quiet_NaN()})),
        Error);
    CHECK_THROWS_AS(
        checked_vector(vec({std::numeric_limits<double>::infinity()})), Error);
    CHECK(checked_vector(vec({1.0, 2.0})) == vec({1.0, 2.0}));
}

TEST_CASE("objective checks dimension") {
    const Objective obj = half_norm();
    CHECK(obj.value(vec({1, 2})) == doctest::Approx(2.5));
    CHECK_THROWS_AS(obj.value(vec({1, 2, 3})), Error);
    CHECK_THROWS_AS(obj.gradient(vec({1})), Error);
}

TEST_CASE("fd_gradient of a quadratic") {
    const Vector g = fd_gradient(half_norm(), vec({1, 2}), 1e-6);
    CHECK(std::abs(g[0] - 1.0) <= 1e-8);
    CHECK(std::abs(g[1] - 2.0) <= 1e-8);
}

TEST_CASE("fd_gradient of a constant") {
    const Objective flat(
        "flat", 3, [](const Vector &) { return 4.25; },
        [](const Vector &x) { return Vector::Zero(x.size()).eval(); });
    const Vector g = fd_gradient(flat, vec({0.3, -7.0, 12.0}), 1e-6);
    CHECK(g.norm() <= 1e-8);
}

TEST_CASE("fd_gradient of rosenbrock at the standard start") {
    const Objective &rosen = lookup("rosenbr").objective;
    const Vector fd = fd_gradient(rosen, vec({-1.2, 1.0}), 1e-6);
    // by hand: -400 x1 (x2 - x1^2) - 2 (1 - x1), 200 (x2 - x1^2)
    CHECK(std::abs(fd[0] - (-215.6)) <= 1e-6 * 215.6);
    CHECK(std::abs(fd[1] - (-88.0)) <= 1e-6 * 88.0);
}

TEST_CASE("fd_gradient names the coordinate that failed") {
    const Objective wall(
        "wall", 2,
        [](const Vector &x) {
            return x[1] > 1.0 ? std::numeric_limits<double>::infinity()
                              : x.squaredNorm();
        },
        [](const Vector &x) { return (2.0 * x).eval(); });
    try {
        fd_gradient(wall, vec({0.0, 1.0}), 1e-3);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Evaluation);
        CHECK(std::string(e.what()).find("coordinate 1") != std::string::npos);
    }
    CHECK_THROWS_AS(fd_gradient(wall, vec({0.0, 0.0}), 0.0), Error);
}

TEST_CASE("analytic gradients agree with central differences") {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto &p : registry()) {
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            Vector x = p.start;
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] += 0.1 * (1.0 + std::abs(p.start[i])) * u(rng);
            }
            const Vector g = p.objective.gradient(x);
            const Vector fd = fd_gradient(p.objective, x, 1e-6);
            worst = std::max(worst, (g - fd).norm() / (1.0 + g.norm()));
        }
        INFO(p.name, " worst relative error ", worst);
        CHECK(worst <= 1e-5);
    }
}
