#pragma once

#include "heg/geometry.hpp"
#include "heg/linalg6.hpp"
#include "heg/velocity.hpp"

namespace heg {

struct TaylorEvidence {
    double a1 = 0.0;      // Psi'(0)
    double a2 = 0.0;      // Psi''(0)
    double nuDotU = 0.0;  // nu . U
};

enum class GermLabel { Pre, Post, Grazing, Inadmissible, Undetermined };

struct GermClass {
    GermLabel label = GermLabel::Undetermined;
    TaylorEvidence evidence;
};

const char* to_string(GermLabel label);

// Level of body 1 at the tracked material contact point of body 2, along the
// constant-velocity trajectory: Psi(t) = F(q(t), t) with
// q(t) = xbar(t) + R(theta + t*omegabar) R(theta)^T (p - d e(psi)).
double tracking_psi(const Shape& s, const Beta& beta, const ContactData& contact,
                    const Velocity6& U, double t);

// Collision direction [−n; n; −(p∧n); −(q∧n)] in Velocity6 ordering. The two
// angular entries are the (negated) moment arms of the contact point about
// each body's center; this is the unique sign choice orthogonal to the
// conserved angular-momentum covector.
Vec6 nu_vector(const ContactData& contact);

// First Taylor coefficient: 2 E p . (vbar − v − omega p⊥ − omegabar q⊥).
double psi_dot0(const Shape& s, const ContactData& contact, const Velocity6& U);

// Second Taylor coefficient, closed form (validated against finite
// differences of tracking_psi):
//   2 g.Eg − 2 omega² (p.Ep) + 4 omega (Ep)⊥.(vbar − v − omegabar q⊥)
//   + 2 omegabar² (Ep.q),   g = vbar − v − omega p⊥ − omegabar q⊥.
double psi_ddot0(const Shape& s, const ContactData& contact, const Velocity6& U);

// Sign trichotomy on (a1, a2) with the tol::cls band; Undetermined inside the
// band on both coefficients.
GermClass classify_local(const Shape& s, const ContactData& contact, const Velocity6& U);

// Oracle-backed classification from overlap statuses over [-horizon, horizon].
// Throws ClassificationConflict if it contradicts classify_local while the
// scan demonstrably resolves the linear term.
GermClass classify_certified(const Shape& s, const Beta& beta, const Velocity6& U,
                             double horizon, int samples);

}  // namespace heg
