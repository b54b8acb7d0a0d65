#pragma once

#include "heg/geometry.hpp"
#include "heg/linalg6.hpp"
#include "heg/velocity.hpp"

namespace heg {

// Unit-density mass and polar second moment of the reference body, with the
// sqrt-weighted diagonal used by the reflection construction.
struct MassInertia {
    double m = 0.0;
    double J = 0.0;
    Vec6 Mdiag{};  // (sqrt m, sqrt m, sqrt m, sqrt m, sqrt J, sqrt J)
};

MassInertia mass_inertia(const Shape& s);

struct ScatterOperator {
    Vec6 nu_hat{};  // unit collision direction in the M-weighted frame
    Mat6 s;         // M^{-1} (I - 2 nu_hat nu_hat^T) M
    Vec6 Mdiag{};
};

// Conserved-quantity covectors: linear momentum E1, E2 and angular momentum
// Gamma = (0, 0, -m d sin psi, m d cos psi, J, J), with d e(psi) = p + q.
struct ConservedVectors {
    Vec6 E1{};
    Vec6 E2{};
    Vec6 Gamma{};
};

ConservedVectors conserved_vectors(const ContactData& contact, const MassInertia& mi);

// Reflection about nu_hat in the M-weighted frame; nu_hat = c M^{-1} nu with
// nu = nu_vector(contact) and c = (2/m + (p∧n)²/J + (q∧n)²/J)^{-1/2}, so that
// nu_hat.(MU) = c (nu.U) for every U.
ScatterOperator build_scatter(const ContactData& contact, const MassInertia& mi);

// U' = U - 2 (nu_hat . MU) M^{-1} nu_hat  (equals s U).
Velocity6 apply_scatter(const ScatterOperator& op, const Velocity6& U);

struct ConservationReport {
    double lin1 = 0.0;    // |E1.(U' - U)|
    double lin2 = 0.0;    // |E2.(U' - U)|
    double angular = 0.0; // |Gamma.(U' - U)|
    double energy = 0.0;  // ||MU'|^2 - |MU|^2|
};

ConservationReport check_conservation(const ContactData& contact, const MassInertia& mi,
                                      const Velocity6& U, const Velocity6& Uprime);

}  // namespace heg
