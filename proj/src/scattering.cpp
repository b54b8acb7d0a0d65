#include "heg/scattering.hpp"

#include <cmath>

#include "heg/germs.hpp"

namespace heg {
namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

MassInertia mass_inertia(const Shape& s) {
    MassInertia mi;
    if (s.kind == ShapeKind::Disk) {
        // radius 1/2: m = pi r^2, J = pi r^4 / 2
        mi.m = kPi / 4.0;
        mi.J = kPi / 32.0;
    } else {
        // semi-axes (1/eps, 1): m = pi a b, J = (pi/4) a b (a^2 + b^2)
        double eps = s.epsilon;
        mi.m = kPi / eps;
        mi.J = kPi * (1.0 + eps * eps) / (4.0 * eps * eps * eps);
    }
    double sm = std::sqrt(mi.m), sj = std::sqrt(mi.J);
    mi.Mdiag = {sm, sm, sm, sm, sj, sj};
    return mi;
}

ConservedVectors conserved_vectors(const ContactData& contact, const MassInertia& mi) {
    ConservedVectors cv;
    cv.E1 = {1.0, 0.0, 1.0, 0.0, 0.0, 0.0};
    cv.E2 = {0.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    Vec2 de = contact.p + contact.q;  // d e(psi)
    cv.Gamma = {0.0, 0.0, -mi.m * de.y, mi.m * de.x, mi.J, mi.J};
    return cv;
}

ScatterOperator build_scatter(const ContactData& contact, const MassInertia& mi) {
    Vec6 nu = nu_vector(contact);
    double pn = cross(contact.p, contact.n);
    double qn = cross(contact.q, contact.n);
    double c = 1.0 / std::sqrt(2.0 / mi.m + pn * pn / mi.J + qn * qn / mi.J);

    ScatterOperator op;
    op.Mdiag = mi.Mdiag;
    for (int i = 0; i < 6; ++i) op.nu_hat[i] = c * nu[i] / mi.Mdiag[i];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double refl = (i == j ? 1.0 : 0.0) - 2.0 * op.nu_hat[i] * op.nu_hat[j];
            op.s(i, j) = refl * mi.Mdiag[j] / mi.Mdiag[i];
        }
    return op;
}

Velocity6 apply_scatter(const ScatterOperator& op, const Velocity6& U) {
    Vec6 u = U.to_array();
    double proj = 0.0;
    for (int i = 0; i < 6; ++i) proj += op.nu_hat[i] * op.Mdiag[i] * u[i];
    Vec6 result;
    for (int i = 0; i < 6; ++i) result[i] = u[i] - 2.0 * proj * op.nu_hat[i] / op.Mdiag[i];
    return Velocity6::from_array(result);
}

ConservationReport check_conservation(const ContactData& contact, const MassInertia& mi,
                                      const Velocity6& U, const Velocity6& Uprime) {
    ConservedVectors cv = conserved_vectors(contact, mi);
    Vec6 u = U.to_array(), up = Uprime.to_array();
    Vec6 du;
    for (int i = 0; i < 6; ++i) du[i] = up[i] - u[i];
    ConservationReport r;
    r.lin1 = std::fabs(dot6(cv.E1, du));
    r.lin2 = std::fabs(dot6(cv.E2, du));
    r.angular = std::fabs(dot6(cv.Gamma, du));
    double e0 = 0.0, e1 = 0.0;
    for (int i = 0; i < 6; ++i) {
        e0 += mi.Mdiag[i] * mi.Mdiag[i] * u[i] * u[i];
        e1 += mi.Mdiag[i] * mi.Mdiag[i] * up[i] * up[i];
    }
    r.energy = std::fabs(e1 - e0);
    return r;
}

}  // namespace heg
