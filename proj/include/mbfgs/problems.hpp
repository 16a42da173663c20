#ifndef MBFGS_PROBLEMS_HPP
#define MBFGS_PROBLEMS_HPP

#include "mbfgs/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mbfgs {

struct ProblemSpec {
    std::string name;
    Eigen::Index dimension;
    Vector start;
    Objective objective;
    std::optional<double> known_f_min;
    /// A point where known_f_min is attained, when one is known in closed form.
    std::optional<Vector> known_minimizer;
    std::optional<double> known_gnorm_at_start;
};

/// All bundled problems, sorted by name. Built once; safe to share.
const std::vector<ProblemSpec> &registry();

/// Throws ErrorCode::NotFound (listing the available names) for unknown names.
const ProblemSpec &lookup(const std::string &name);

} // namespace mbfgs

#endif // MBFGS_PROBLEMS_HPP
