#ifndef MBFGS_REFERENCE_UPDATES_HPP
#define MBFGS_REFERENCE_UPDATES_HPP

// Alternative update formulas kept for cross-checking update_inverse.
// The solver never calls these.

#include "mbfgs/core.hpp"

namespace mbfgs::reference {

/// Direct-form update E - E s s'E / s'Es + z z' / z's.
/// Throws LostDefiniteness when s'Es <= 0 and Usage when z's <= 0.
Matrix update_direct(const Matrix &estimate, const Vector &s, const Vector &z);

/// Expanded inverse update
///   E - rho (s z'E + E z s') + rho^2 (z'Ez) s s' + rho s s',  rho = 1/z's.
/// Cheaper than the product form but loses definiteness when E is badly
/// conditioned.
Matrix update_inverse_unstable(const Matrix &inverse_estimate, const Vector &s,
                               const Vector &z);

} // namespace mbfgs::reference

#endif // MBFGS_REFERENCE_UPDATES_HPP
