#include "mbfgs/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>

// Formulas and standard starting points follow the Moré-Garbow-Hillstrom
// collection (ACM TOMS 7, 1981) and the CUTE SIF files of the same name.

namespace mbfgs {

namespace {

/// Fills r (and J when non-null) at x.
using ResidualFn = std::function<void(const Vector &x, Vector &r, Matrix *J)>;

/// f = sum r_i^2, g = 2 J'r.
Objective least_squares(const std::string &name, Eigen::Index n,
                        Eigen::Index m, ResidualFn residual) {
    auto value = [m, residual](const Vector &x) {
        Vector r(m);
        residual(x, r, nullptr);
        return r.squaredNorm();
    };
    auto gradient = [n, m, residual](const Vector &x) {
        Vector r(m);
        Matrix J = Matrix::Zero(m, n);
        residual(x, r, &J);
        Vector g = 2.0 * J.transpose() * r;
        return g;
    };
    return Objective(name, n, std::move(value), std::move(gradient));
}

Vector vec(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v[i++] = x;
    }
    return v;
}

ProblemSpec make(std::string name, Vector start, Objective obj,
                 std::optional<double> f_min = std::nullopt,
                 std::optional<Vector> minimizer = std::nullopt) {
    const Eigen::Index n = start.size();
    return ProblemSpec{std::move(name), n,           std::move(start),
                       std::move(obj),  f_min,       std::move(minimizer),
                       std::nullopt};
}

// --- two variables ---------------------------------------------------------

// 100 (x2 - x1^2)^2 + (1 - x1)^2
ProblemSpec rosenbr() {
    auto obj = least_squares("rosenbr", 2, 2,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 r[0] = 10.0 * (x[1] - x[0] * x[0]);
                                 r[1] = 1.0 - x[0];
                                 if (J) {
                                     (*J)(0, 0) = -20.0 * x[0];
                                     (*J)(0, 1) = 10.0;
                                     (*J)(1, 0) = -1.0;
                                 }
                             });
    return make("rosenbr", vec({-1.2, 1.0}), std::move(obj), 0.0,
                vec({1.0, 1.0}));
}

// sum_{i=1..3} (c_i - x1 (1 - x2^i))^2
ProblemSpec beale() {
    auto obj = least_squares(
        "beale", 2, 3, [](const Vector &x, Vector &r, Matrix *J) {
            constexpr std::array<double, 3> c{1.5, 2.25, 2.625};
            for (int i = 0; i < 3; ++i) {
                const int p = i + 1;
                const double xp = std::pow(x[1], p);
                r[i] = c[i] - x[0] * (1.0 - xp);
                if (J) {
                    (*J)(i, 0) = -(1.0 - xp);
                    (*J)(i, 1) = x[0] * p * std::pow(x[1], p - 1);
                }
            }
        });
    return make("beale", vec({1.0, 1.0}), std::move(obj), 0.0,
                vec({3.0, 0.5}));
}

// (x1 - 1)^2 + 100 (x2 - x1^3)^2
ProblemSpec cube() {
    auto obj = least_squares("cube", 2, 2,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 r[0] = x[0] - 1.0;
                                 r[1] = 10.0 * (x[1] - x[0] * x[0] * x[0]);
                                 if (J) {
                                     (*J)(0, 0) = 1.0;
                                     (*J)(1, 0) = -30.0 * x[0] * x[0];
                                     (*J)(1, 1) = 10.0;
                                 }
                             });
    return make("cube", vec({-1.2, 1.0}), std::move(obj), 0.0,
                vec({1.0, 1.0}));
}

// (x2 - sin x1)^2 / 1e-4 + x1^2 / 4
ProblemSpec sineval() {
    auto obj = least_squares("sineval", 2, 2,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 r[0] = 100.0 * (x[1] - std::sin(x[0]));
                                 r[1] = 0.5 * x[0];
                                 if (J) {
                                     (*J)(0, 0) = -100.0 * std::cos(x[0]);
                                     (*J)(0, 1) = 100.0;
                                     (*J)(1, 0) = 0.5;
                                 }
                             });
    return make("sineval", vec({4.5, 3.5}), std::move(obj), 0.0,
                vec({0.0, 0.0}));
}

// Brown badly scaled: (x1 - 1e6)^2 + (x2 - 2e-6)^2 + (x1 x2 - 2)^2
ProblemSpec brownbs() {
    auto obj = least_squares("brownbs", 2, 3,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 r[0] = x[0] - 1e6;
                                 r[1] = x[1] - 2e-6;
                                 r[2] = x[0] * x[1] - 2.0;
                                 if (J) {
                                     (*J)(0, 0) = 1.0;
                                     (*J)(1, 1) = 1.0;
                                     (*J)(2, 0) = x[1];
                                     (*J)(2, 1) = x[0];
                                 }
                             });
    return make("brownbs", vec({1.0, 1.0}), std::move(obj), 0.0,
                vec({1e6, 2e-6}));
}

// x1^4 + (x1 + x2)^2 + (e^x2 - 1)^2
ProblemSpec denschna() {
    auto obj = least_squares("denschna", 2, 3,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 const double e = std::exp(x[1]);
                                 r[0] = x[0] * x[0];
                                 r[1] = x[0] + x[1];
                                 r[2] = e - 1.0;
                                 if (J) {
                                     (*J)(0, 0) = 2.0 * x[0];
                                     (*J)(1, 0) = 1.0;
                                     (*J)(1, 1) = 1.0;
                                     (*J)(2, 1) = e;
                                 }
                             });
    return make("denschna", vec({1.0, 1.0}), std::move(obj), 0.0,
                vec({0.0, 0.0}));
}

// (x1 - 2)^2 + (x1 - 2)^2 x2^2 + (x2 + 1)^2
ProblemSpec denschnb() {
    auto obj = least_squares("denschnb", 2, 3,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 r[0] = x[0] - 2.0;
                                 r[1] = (x[0] - 2.0) * x[1];
                                 r[2] = x[1] + 1.0;
                                 if (J) {
                                     (*J)(0, 0) = 1.0;
                                     (*J)(1, 0) = x[1];
                                     (*J)(1, 1) = x[0] - 2.0;
                                     (*J)(2, 1) = 1.0;
                                 }
                             });
    return make("denschnb", vec({1.0, 1.0}), std::move(obj), 0.0,
                vec({2.0, -1.0}));
}

// (x1^2 + x2^2 - 2)^2 + (e^(x1-1) + x2^3 - 2)^2
ProblemSpec denschnc() {
    auto obj = least_squares("denschnc", 2, 2,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 const double e = std::exp(x[0] - 1.0);
                                 r[0] = x[0] * x[0] + x[1] * x[1] - 2.0;
                                 r[1] = e + x[1] * x[1] * x[1] - 2.0;
                                 if (J) {
                                     (*J)(0, 0) = 2.0 * x[0];
                                     (*J)(0, 1) = 2.0 * x[1];
                                     (*J)(1, 0) = e;
                                     (*J)(1, 1) = 3.0 * x[1] * x[1];
                                 }
                             });
    return make("denschnc", vec({2.0, 3.0}), std::move(obj), 0.0,
                vec({1.0, 1.0}));
}

// (2 (x1+x2)^2 + (x1-x2)^2 - 8)^2 + (5 x1^2 + (x2-3)^2 - 9)^2
ProblemSpec denschnf() {
    auto obj = least_squares(
        "denschnf", 2, 2, [](const Vector &x, Vector &r, Matrix *J) {
            const double p = x[0] + x[1];
            const double q = x[0] - x[1];
            r[0] = 2.0 * p * p + q * q - 8.0;
            r[1] = 5.0 * x[0] * x[0] + (x[1] - 3.0) * (x[1] - 3.0) - 9.0;
            if (J) {
                (*J)(0, 0) = 4.0 * p + 2.0 * q;
                (*J)(0, 1) = 4.0 * p - 2.0 * q;
                (*J)(1, 0) = 10.0 * x[0];
                (*J)(1, 1) = 2.0 * (x[1] - 3.0);
            }
        });
    return make("denschnf", vec({2.0, 0.0}), std::move(obj), 0.0);
}

// (2 x1^2 + 3 x2^2) exp(-x1 - x2)
ProblemSpec himmelbg() {
    Objective obj(
        "himmelbg", 2,
        [](const Vector &x) {
            return (2.0 * x[0] * x[0] + 3.0 * x[1] * x[1]) *
                   std::exp(-x[0] - x[1]);
        },
        [](const Vector &x) {
            const double e = std::exp(-x[0] - x[1]);
            const double q = 2.0 * x[0] * x[0] + 3.0 * x[1] * x[1];
            Vector g(2);
            g[0] = e * (4.0 * x[0] - q);
            g[1] = e * (6.0 * x[1] - q);
            return g;
        });
    return make("himmelbg", vec({0.5, 0.5}), std::move(obj), 0.0,
                vec({0.0, 0.0}));
}

// -3 x1 - 2 x2 + 2 + x1^3 + x2^2
ProblemSpec himmelbh() {
    Objective obj(
        "himmelbh", 2,
        [](const Vector &x) {
            return -3.0 * x[0] - 2.0 * x[1] + 2.0 + x[0] * x[0] * x[0] +
                   x[1] * x[1];
        },
        [](const Vector &x) {
            Vector g(2);
            g[0] = -3.0 + 3.0 * x[0] * x[0];
            g[1] = -2.0 + 2.0 * x[1];
            return g;
        });
    return make("himmelbh", vec({0.0, 2.0}), std::move(obj), -1.0,
                vec({1.0, 1.0}));
}

// (x1-2)^2 + (x2-1)^2 + 0.04 / c + 5 h^2,
// c = 1 - x1^2/4 - x2^2, h = x1 - 2 x2 + 1
ProblemSpec brkmcc() {
    Objective obj(
        "brkmcc", 2,
        [](const Vector &x) {
            const double c = 1.0 - 0.25 * x[0] * x[0] - x[1] * x[1];
            const double h = x[0] - 2.0 * x[1] + 1.0;
            return (x[0] - 2.0) * (x[0] - 2.0) + (x[1] - 1.0) * (x[1] - 1.0) +
                   0.04 / c + 5.0 * h * h;
        },
        [](const Vector &x) {
            const double c = 1.0 - 0.25 * x[0] * x[0] - x[1] * x[1];
            const double h = x[0] - 2.0 * x[1] + 1.0;
            const double w = 0.04 / (c * c);
            Vector g(2);
            g[0] = 2.0 * (x[0] - 2.0) + w * 0.5 * x[0] + 10.0 * h;
            g[1] = 2.0 * (x[1] - 1.0) + w * 2.0 * x[1] - 20.0 * h;
            return g;
        });
    return make("brkmcc", vec({2.0, 2.0}), std::move(obj));
}

// (0.01 x1 - 0.03)^2 - x1 + x2 + exp(20 (x1 - x2))
ProblemSpec cliff() {
    Objective obj(
        "cliff", 2,
        [](const Vector &x) {
            const double a = 0.01 * x[0] - 0.03;
            return a * a - x[0] + x[1] + std::exp(20.0 * (x[0] - x[1]));
        },
        [](const Vector &x) {
            const double a = 0.01 * x[0] - 0.03;
            const double e = std::exp(20.0 * (x[0] - x[1]));
            Vector g(2);
            g[0] = 0.02 * a - 1.0 + 20.0 * e;
            g[1] = 1.0 - 20.0 * e;
            return g;
        });
    return make("cliff", vec({0.0, -1.0}), std::move(obj));
}

// sum_{i=1..10} (x1 exp(t_i x2) - t_i)^2, t_i = 0.25 i
ProblemSpec expfit() {
    auto obj = least_squares("expfit", 2, 10,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 for (int i = 0; i < 10; ++i) {
                                     const double t = 0.25 * (i + 1);
                                     const double e = std::exp(t * x[1]);
                                     r[i] = x[0] * e - t;
                                     if (J) {
                                         (*J)(i, 0) = e;
                                         (*J)(i, 1) = x[0] * t * e;
                                     }
                                 }
                             });
    return make("expfit", vec({0.0, 0.0}), std::move(obj));
}

// sum_{i=1..10} (2 + 2i - exp(i x1) - exp(i x2))^2
ProblemSpec jensmp() {
    auto obj = least_squares("jensmp", 2, 10,
                             [](const Vector &x, Vector &r, Matrix *J) {
                                 for (int i = 0; i < 10; ++i) {
                                     const double t = i + 1.0;
                                     const double e1 = std::exp(t * x[0]);
                                     const double e2 = std::exp(t * x[1]);
                                     r[i] = 2.0 + 2.0 * t - e1 - e2;
                                     if (J) {
                                         (*J)(i, 0) = -t * e1;
                                         (*J)(i, 1) = -t * e2;
                                     }
                                 }
                             });
    return make("jensmp", vec({0.3, 0.4}), std::move(obj));
}

// 3 x1^4 - 2 x1^2 x2^2 + 3 x2^4
ProblemSpec sisser() {
    Objective obj(
        "sisser", 2,
        [](const Vector &x) {
            const double a = x[0] * x[0];
            const double b = x[1] * x[1];
            return 3.0 * a * a - 2.0 * a * b + 3.0 * b * b;
        },
        [](const Vector &x) {
            const double a = x[0] * x[0];
            const double b = x[1] * x[1];
            Vector g(2);
            g[0] = 12.0 * a * x[0] - 4.0 * x[0] * b;
            g[1] = 12.0 * b * x[1] - 4.0 * a * x[1];
            return g;
        });
    return make("sisser", vec({1.0, 0.1}), std::move(obj), 0.0,
                vec({0.0, 0.0}));
}

// --- three to six variables ------------------------------------------------

// sum_{i=1..15} (y_i - (x1 + u_i / (v_i x2 + w_i x3)))^2,
// u_i = i, v_i = 16 - i, w_i = min(u_i, v_i)
ProblemSpec bard() {
    auto obj = least_squares(
        "bard", 3, 15, [](const Vector &x, Vector &r, Matrix *J) {
            constexpr std::array<double, 15> y{
                0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39,
                0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39};
            for (int i = 0; i < 15; ++i) {
                const double u = i + 1.0;
                const double v = 16.0 - u;
                const double w = std::min(u, v);
                const double den = v * x[1] + w * x[2];
                r[i] = y[i] - (x[0] + u / den);
                if (J) {
                    (*J)(i, 0) = -1.0;
                    (*J)(i, 1) = u * v / (den * den);
                    (*J)(i, 2) = u * w / (den * den);
                }
            }
        });
    return make("bard", vec({1.0, 1.0, 1.0}), std::move(obj));
}

// sum_{i=1..10} (e^{-t x1} - e^{-t x2} - x3 (e^{-t} - e^{-10 t}))^2, t = 0.1 i
ProblemSpec box3() {
    auto obj = least_squares(
        "box3", 3, 10, [](const Vector &x, Vector &r, Matrix *J) {
            for (int i = 0; i < 10; ++i) {
                const double t = 0.1 * (i + 1);
                const double e1 = std::exp(-t * x[0]);
                const double e2 = std::exp(-t * x[1]);
                const double c = std::exp(-t) - std::exp(-10.0 * t);
                r[i] = e1 - e2 - x[2] * c;
                if (J) {
                    (*J)(i, 0) = -t * e1;
                    (*J)(i, 1) = t * e2;
                    (*J)(i, 2) = -c;
                }
            }
        });
    return make("box3", vec({0.0, 10.0, 20.0}), std::move(obj), 0.0,
                vec({1.0, 10.0, 1.0}));
}

// Helical valley: 100 [(x3 - 10 theta)^2 + (|(x1,x2)| - 1)^2] + x3^2
ProblemSpec helix() {
    auto obj = least_squares(
        "helix", 3, 3, [](const Vector &x, Vector &r, Matrix *J) {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            double theta = 0.0;
            if (x[0] > 0.0) {
                theta = std::atan(x[1] / x[0]) / two_pi;
            } else if (x[0] < 0.0) {
                theta = std::atan(x[1] / x[0]) / two_pi + 0.5;
            } else {
                theta = x[1] >= 0.0 ? 0.25 : -0.25;
            }
            const double rho2 = x[0] * x[0] + x[1] * x[1];
            const double rho = std::sqrt(rho2);
            r[0] = 10.0 * (x[2] - 10.0 * theta);
            r[1] = 10.0 * (rho - 1.0);
            r[2] = x[2];
            if (J) {
                (*J)(0, 0) = 100.0 * x[1] / (two_pi * rho2);
                (*J)(0, 1) = -100.0 * x[0] / (two_pi * rho2);
                (*J)(0, 2) = 10.0;
                (*J)(1, 0) = 10.0 * x[0] / rho;
                (*J)(1, 1) = 10.0 * x[1] / rho;
                (*J)(2, 2) = 1.0;
            }
        });
    return make("helix", vec({-1.0, 0.0, 0.0}), std::move(obj), 0.0,
                vec({1.0, 0.0, 0.0}));
}

ProblemSpec engval2() {
    auto obj = least_squares(
        "engval2", 3, 5, [](const Vector &x, Vector &r, Matrix *J) {
            const double a = x[0];
            const double b = x[1];
            const double c = x[2];
            const double q = 5.0 * c - a + 1.0;
            r[0] = a * a + b * b + c * c - 1.0;
            r[1] = a * a + b * b + (c - 2.0) * (c - 2.0) - 1.0;
            r[2] = a + b + c - 1.0;
            r[3] = a + b - c + 1.0;
            r[4] = a * a * a + 3.0 * b * b + q * q - 36.0;
            if (J) {
                J->row(0) << 2.0 * a, 2.0 * b, 2.0 * c;
                J->row(1) << 2.0 * a, 2.0 * b, 2.0 * (c - 2.0);
                J->row(2) << 1.0, 1.0, 1.0;
                J->row(3) << 1.0, 1.0, -1.0;
                J->row(4) << 3.0 * a * a - 2.0 * q, 6.0 * b, 10.0 * q;
            }
        });
    return make("engval2", vec({1.0, 2.0, 0.0}), std::move(obj), 0.0,
                vec({0.0, 0.0, 1.0}));
}

// Exponential fit x1 exp(t x2) - exp(t x3) ~ z on ten points.
// NOTE: the data table here is a reconstruction; the minimum it yields (~1e-6)
// is not the one known for the original data set.
ProblemSpec hatfldd() {
    auto obj = least_squares(
        "hatfldd", 3, 10, [](const Vector &x, Vector &r, Matrix *J) {
            constexpr std::array<double, 10> z{1.751,  1.561,  1.391,  1.239,
                                               1.103,  0.9825, 0.8753, 0.7795,
                                               0.6940, 0.6182};
            for (int i = 0; i < 10; ++i) {
                const double t = 0.2 + 0.1 * i;
                const double e2 = std::exp(t * x[1]);
                const double e3 = std::exp(t * x[2]);
                r[i] = x[0] * e2 - e3 - z[i];
                if (J) {
                    (*J)(i, 0) = e2;
                    (*J)(i, 1) = x[0] * t * e2;
                    (*J)(i, 2) = -t * e3;
                }
            }
        });
    return make("hatfldd", vec({1.0, -1.0, 0.0}), std::move(obj));
}

ProblemSpec denschnd() {
    auto obj = least_squares(
        "denschnd", 3, 3, [](const Vector &x, Vector &r, Matrix *J) {
            const double a = x[0];
            const double b = x[1];
            const double c = x[2];
            r[0] = a * a + b * b * b - c * c * c * c;
            r[1] = 2.0 * a * b * c;
            r[2] = 2.0 * a * b - 3.0 * b * c + a * c;
            if (J) {
                J->row(0) << 2.0 * a, 3.0 * b * b, -4.0 * c * c * c;
                J->row(1) << 2.0 * b * c, 2.0 * a * c, 2.0 * a * b;
                J->row(2) << 2.0 * b + c, 2.0 * a - 3.0 * c, -3.0 * b + a;
            }
        });
    return make("denschnd", vec({10.0, 10.0, 10.0}), std::move(obj), 0.0,
                vec({0.0, 0.0, 0.0}));
}

// Kowalik-Osborne: sum (y_i - x1 (u^2 + u x2) / (u^2 + u x3 + x4))^2
ProblemSpec kowosb() {
    auto obj = least_squares(
        "kowosb", 4, 11, [](const Vector &x, Vector &r, Matrix *J) {
            constexpr std::array<double, 11> y{0.1957, 0.1947, 0.1735, 0.1600,
                                               0.0844, 0.0627, 0.0456, 0.0342,
                                               0.0323, 0.0235, 0.0246};
            constexpr std::array<double, 11> u{4.0,    2.0,    1.0,   0.5,
                                               0.25,   0.167,  0.125, 0.1,
                                               0.0833, 0.0714, 0.0625};
            for (int i = 0; i < 11; ++i) {
                const double num = u[i] * u[i] + u[i] * x[1];
                const double den = u[i] * u[i] + u[i] * x[2] + x[3];
                r[i] = y[i] - x[0] * num / den;
                if (J) {
                    (*J)(i, 0) = -num / den;
                    (*J)(i, 1) = -x[0] * u[i] / den;
                    (*J)(i, 2) = x[0] * num * u[i] / (den * den);
                    (*J)(i, 3) = x[0] * num / (den * den);
                }
            }
        });
    return make("kowosb", vec({0.25, 0.39, 0.415, 0.39}), std::move(obj));
}

// Biggs EXP6 with 13 data points.
ProblemSpec biggs6() {
    auto obj = least_squares(
        "biggs6", 6, 13, [](const Vector &x, Vector &r, Matrix *J) {
            for (int i = 0; i < 13; ++i) {
                const double t = 0.1 * (i + 1);
                const double y = std::exp(-t) - 5.0 * std::exp(-10.0 * t) +
                                 3.0 * std::exp(-4.0 * t);
                const double e1 = std::exp(-t * x[0]);
                const double e2 = std::exp(-t * x[1]);
                const double e5 = std::exp(-t * x[4]);
                r[i] = x[2] * e1 - x[3] * e2 + x[5] * e5 - y;
                if (J) {
                    J->row(i) << -t * x[2] * e1, t * x[3] * e2, e1, -e2,
                        -t * x[5] * e5, e5;
                }
            }
        });
    return make("biggs6", vec({1.0, 2.0, 1.0, 1.0, 1.0, 1.0}), std::move(obj),
                0.0, vec({1.0, 10.0, 1.0, 5.0, 4.0, 3.0}));
}

// --- larger problems -------------------------------------------------------

// (x1 - 1)^2 + sum_{j=2..n-1} (x_j - x_{j+1})^2 + (x_n - 1)^2
ProblemSpec dixon3dq() {
    constexpr Eigen::Index n = 10;
    auto obj = least_squares(
        "dixon3dq", n, n, [](const Vector &x, Vector &r, Matrix *J) {
            r[0] = x[0] - 1.0;
            for (Eigen::Index j = 1; j < n - 1; ++j) {
                r[j] = x[j] - x[j + 1];
            }
            r[n - 1] = x[n - 1] - 1.0;
            if (J) {
                (*J)(0, 0) = 1.0;
                for (Eigen::Index j = 1; j < n - 1; ++j) {
                    (*J)(j, j) = 1.0;
                    (*J)(j, j + 1) = -1.0;
                }
                (*J)(n - 1, n - 1) = 1.0;
            }
        });
    return make("dixon3dq", Vector::Constant(n, -1.0), std::move(obj), 0.0,
                Vector::Constant(n, 1.0));
}

// 1/2 x'(H + shift I)x with H the Hilbert matrix.
ProblemSpec hilbert(const std::string &name, Eigen::Index n, double shift) {
    Matrix h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            h(i, j) = 1.0 / static_cast<double>(i + j + 1);
        }
    }
    h.diagonal().array() += shift;
    Objective obj(
        name, n, [h](const Vector &x) { return 0.5 * x.dot(h * x); },
        [h](const Vector &x) {
            Vector g = h * x;
            return g;
        });
    return make(name, Vector::Constant(n, -3.0), std::move(obj), 0.0,
                Vector::Zero(n));
}

// sum_{i=2..n} [16 a_i^2 (x_{i-1} - x_i^2)^2 + (x_i - 1)^2]
ProblemSpec chnrosnb() {
    constexpr Eigen::Index n = 50;
    static constexpr std::array<double, n> alpha{
        1.25, 1.40, 2.40, 1.40, 1.75, 1.20, 2.25, 1.20, 1.00, 1.10,
        1.50, 1.60, 1.25, 1.25, 1.20, 1.20, 1.40, 0.50, 0.50, 1.25,
        1.80, 0.75, 1.25, 1.40, 1.60, 2.00, 1.00, 1.60, 1.25, 2.75,
        1.25, 1.25, 1.25, 3.00, 1.50, 2.00, 1.25, 1.40, 1.80, 1.50,
        2.20, 1.40, 1.50, 1.25, 2.00, 1.50, 1.25, 1.40, 0.60, 1.50};
    auto obj = least_squares(
        "chnrosnb", n, 2 * (n - 1), [](const Vector &x, Vector &r, Matrix *J) {
            for (Eigen::Index i = 1; i < n; ++i) {
                const Eigen::Index a = 2 * (i - 1);
                const double c = 4.0 * alpha[static_cast<std::size_t>(i)];
                r[a] = c * (x[i - 1] - x[i] * x[i]);
                r[a + 1] = x[i] - 1.0;
                if (J) {
                    (*J)(a, i - 1) = c;
                    (*J)(a, i) = -2.0 * c * x[i];
                    (*J)(a + 1, i) = 1.0;
                }
            }
        });
    return make("chnrosnb", Vector::Constant(n, -1.0), std::move(obj), 0.0,
                Vector::Constant(n, 1.0));
}

// sum_{i=1..n-1} 100 (x_{i+1} - x_i + 1 - x_i^2)^2
ProblemSpec fletchcr() {
    constexpr Eigen::Index n = 100;
    auto obj = least_squares(
        "fletchcr", n, n - 1, [](const Vector &x, Vector &r, Matrix *J) {
            for (Eigen::Index i = 0; i < n - 1; ++i) {
                r[i] = 10.0 * (x[i + 1] - x[i] + 1.0 - x[i] * x[i]);
                if (J) {
                    (*J)(i, i) = -10.0 * (1.0 + 2.0 * x[i]);
                    (*J)(i, i + 1) = 10.0;
                }
            }
        });
    return make("fletchcr", Vector::Zero(n), std::move(obj), 0.0,
                Vector::Constant(n, 1.0));
}

// sum (x_i - 1)^2 + S^2 + S^4, S = sum i (x_i - 1)
ProblemSpec vardim() {
    constexpr Eigen::Index n = 100;
    const Vector weights = Vector::LinSpaced(n, 1.0, static_cast<double>(n));
    Objective obj(
        "vardim", n,
        [weights](const Vector &x) {
            const Vector e = x.array() - 1.0;
            const double s = weights.dot(e);
            const double s2 = s * s;
            return e.squaredNorm() + s2 + s2 * s2;
        },
        [weights](const Vector &x) {
            const Vector e = x.array() - 1.0;
            const double s = weights.dot(e);
            Vector g = 2.0 * e + (2.0 * s + 4.0 * s * s * s) * weights;
            return g;
        });
    Vector start(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        start[i] = 1.0 - static_cast<double>(i + 1) / n;
    }
    return make("vardim", std::move(start), std::move(obj), 0.0,
                Vector::Constant(n, 1.0));
}

// Linear function, full rank: n = 100 variables, m = 200 residuals.
ProblemSpec arglina() {
    constexpr Eigen::Index n = 100;
    constexpr Eigen::Index m = 200;
    auto obj = least_squares(
        "arglina", n, m, [](const Vector &x, Vector &r, Matrix *J) {
            const double c = 2.0 / m;
            const double sum = x.sum();
            for (Eigen::Index i = 0; i < m; ++i) {
                r[i] = (i < n ? x[i] : 0.0) - c * sum - 1.0;
            }
            if (J) {
                J->setConstant(-c);
                for (Eigen::Index i = 0; i < n; ++i) {
                    (*J)(i, i) += 1.0;
                }
            }
        });
    return make("arglina", Vector::Constant(n, 1.0), std::move(obj),
                static_cast<double>(m - n), Vector::Constant(n, -1.0));
}

// Brown almost-linear, n = 10.
ProblemSpec brownal() {
    constexpr Eigen::Index n = 10;
    auto obj = least_squares(
        "brownal", n, n, [](const Vector &x, Vector &r, Matrix *J) {
            const double sum = x.sum();
            for (Eigen::Index i = 0; i < n - 1; ++i) {
                r[i] = x[i] + sum - (n + 1.0);
            }
            r[n - 1] = x.prod() - 1.0;
            if (J) {
                for (Eigen::Index i = 0; i < n - 1; ++i) {
                    J->row(i).setOnes();
                    (*J)(i, i) += 1.0;
                }
                for (Eigen::Index j = 0; j < n; ++j) {
                    double p = 1.0;
                    for (Eigen::Index k = 0; k < n; ++k) {
                        if (k != j) {
                            p *= x[k];
                        }
                    }
                    (*J)(n - 1, j) = p;
                }
            }
        });
    return make("brownal", Vector::Constant(n, 0.5), std::move(obj), 0.0,
                Vector::Constant(n, 1.0));
}

std::vector<ProblemSpec> build_registry() {
    std::vector<ProblemSpec> out;
    out.push_back(arglina());
    out.push_back(bard());
    out.push_back(beale());
    out.push_back(biggs6());
    out.push_back(box3());
    out.push_back(brkmcc());
    out.push_back(brownal());
    out.push_back(brownbs());
    out.push_back(chnrosnb());
    out.push_back(cliff());
    out.push_back(cube());
    out.push_back(denschna());
    out.push_back(denschnb());
    out.push_back(denschnc());
    out.push_back(denschnd());
    out.push_back(denschnf());
    out.push_back(dixon3dq());
    out.push_back(engval2());
    out.push_back(expfit());
    out.push_back(fletchcr());
    out.push_back(hatfldd());
    out.push_back(helix());
    out.push_back(hilbert("hilberta", 10, 0.0));
    out.push_back(hilbert("hilbertb", 50, 5.0));
    out.push_back(himmelbg());
    out.push_back(himmelbh());
    out.push_back(jensmp());
    out.push_back(kowosb());
    out.push_back(rosenbr());
    out.push_back(sineval());
    out.push_back(sisser());
    out.push_back(vardim());
    std::sort(out.begin(), out.end(),
              [](const ProblemSpec &a, const ProblemSpec &b) {
                  return a.name < b.name;
              });
    return out;
}

} // namespace

const std::vector<ProblemSpec> &registry() {
    static const std::vector<ProblemSpec> problems = build_registry();
    return problems;
}

const ProblemSpec &lookup(const std::string &name) {
    for (const auto &p : registry()) {
        if (p.name == name) {
            return p;
        }
    }
    std::string names;
    for (const auto &p : registry()) {
        names += names.empty() ? "" : ", ";
        names += p.name;
    }
    throw Error(ErrorCode::NotFound,
                "unknown problem '" + name + "'; available: " + names);
}

} // namespace mbfgs
