#include "mbfgs/reference_updates.hpp"

namespace mbfgs::reference {

Matrix update_direct(const Matrix &estimate, const Vector &s, const Vector &z) {
    const double zs = dot(z, s);
    if (!(zs > 0.0)) {
        throw Error(ErrorCode::Usage, "update_direct: z's must be positive");
    }
    const Vector es = estimate * s;
    const double ses = s.dot(es);
    if (!(ses > 0.0)) {
        throw Error(ErrorCode::LostDefiniteness, "update_direct: s'Es <= 0");
    }
    Matrix out = estimate;
    out.noalias() -= es * es.transpose() / ses;
    out.noalias() += z * z.transpose() / zs;
    return out;
}

Matrix update_inverse_unstable(const Matrix &inverse_estimate, const Vector &s,
                               const Vector &z) {
    const double rho = 1.0 / dot(z, s);
    const Vector ez = inverse_estimate * z;
    const double zez = z.dot(ez);
    Matrix out = inverse_estimate;
    out.noalias() -= rho * (s * ez.transpose() + ez * s.transpose());
    out.noalias() += (rho * rho * zez + rho) * s * s.transpose();
    return out;
}

} // namespace mbfgs::reference
