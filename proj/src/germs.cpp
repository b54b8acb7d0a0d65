#include "heg/germs.hpp"

#include <cmath>
#include <string>

#include "heg/disk.hpp"
#include "heg/errors.hpp"
#include "heg/oracle.hpp"
#include "heg/tolerances.hpp"

namespace heg {

const char* to_string(GermLabel label) {
    switch (label) {
        case GermLabel::Pre: return "Pre";
        case GermLabel::Post: return "Post";
        case GermLabel::Grazing: return "Grazing";
        case GermLabel::Inadmissible: return "Inadmissible";
        case GermLabel::Undetermined: return "Undetermined";
    }
    return "?";
}

double tracking_psi(const Shape& s, const Beta& beta, const ContactData& contact,
                    const Velocity6& U, double t) {
    auto [pose1, pose2] = poses_at(beta, contact.d, U, t);
    Vec2 body_offset = rotate(-beta.theta, contact.p - contact.d * unit_from_angle(beta.psi));
    Vec2 tracked = pose2.c + rotate(pose2.angle, body_offset);
    return level_value(s, pose1, tracked);
}

Vec6 nu_vector(const ContactData& contact) {
    return {-contact.n.x, -contact.n.y, contact.n.x,
            contact.n.y,  -cross(contact.p, contact.n), -cross(contact.q, contact.n)};
}

double psi_dot0(const Shape& s, const ContactData& contact, const Velocity6& U) {
    Vec2 e = shape_matrix_diag(s);
    Vec2 ep{e.x * contact.p.x, e.y * contact.p.y};
    Vec2 g = U.vbar - U.v - U.omega * perp(contact.p) - U.omegabar * perp(contact.q);
    return 2.0 * dot(ep, g);
}

double psi_ddot0(const Shape& s, const ContactData& contact, const Velocity6& U) {
    Vec2 e = shape_matrix_diag(s);
    Vec2 p = contact.p, q = contact.q;
    Vec2 ep{e.x * p.x, e.y * p.y};
    Vec2 g = U.vbar - U.v - U.omega * perp(p) - U.omegabar * perp(q);
    Vec2 gt = U.vbar - U.v - U.omegabar * perp(q);
    Vec2 eg{e.x * g.x, e.y * g.y};
    return 2.0 * dot(g, eg) - 2.0 * U.omega * U.omega * dot(p, ep) +
           4.0 * U.omega * dot(perp(ep), gt) + 2.0 * U.omegabar * U.omegabar * dot(ep, q);
}

GermClass classify_local(const Shape& s, const ContactData& contact, const Velocity6& U) {
    GermClass g;
    g.evidence.a1 = psi_dot0(s, contact, U);
    g.evidence.a2 = psi_ddot0(s, contact, U);
    g.evidence.nuDotU = dot6(nu_vector(contact), U.to_array());
    if (g.evidence.a1 < -tol::cls)
        g.label = GermLabel::Pre;
    else if (g.evidence.a1 > tol::cls)
        g.label = GermLabel::Post;
    else if (g.evidence.a2 > tol::cls)
        g.label = GermLabel::Grazing;
    else if (g.evidence.a2 < -tol::cls)
        g.label = GermLabel::Inadmissible;
    else
        g.label = GermLabel::Undetermined;
    return g;
}

GermClass classify_certified(const Shape& s, const Beta& beta, const Velocity6& U,
                             double horizon, int samples) {
    ContactData contact = contact_data(s, beta);
    // Disks are rotation-invariant, so their correct local model is the
    // center-distance quadratic, which is also exactly what the oracle sees;
    // material-point tracking would call a pure spin a departure.
    GermClass local =
        s.kind == ShapeKind::Disk ? classify_disk(beta, U) : classify_local(s, contact, U);
    ScanResult scan = time_scan_at(s, beta, contact.d, U, horizon, samples, 0);

    GermClass g;
    g.evidence = local.evidence;
    if (scan.cleanNegative && scan.cleanPositive)
        g.label = GermLabel::Grazing;
    else if (scan.cleanNegative)
        g.label = GermLabel::Pre;
    else if (scan.cleanPositive)
        g.label = GermLabel::Post;
    else
        g.label = GermLabel::Inadmissible;

    // The scans are trusted only as far as they can resolve the linear Taylor
    // term: the window must be linear-dominated and the smallest sample must
    // produce a penetration clearly above the predicate band. Outside that
    // regime a disagreement with the local label is expected, not a defect.
    double a1 = local.evidence.a1, a2 = local.evidence.a2;
    bool resolvable = std::fabs(a1) > 10.0 * tol::cls &&
                      std::fabs(a2) * horizon <= 0.5 * std::fabs(a1) &&
                      std::fabs(a1) * (horizon / samples) >= 20.0 * tol::value_band;
    if (resolvable && g.label != local.label)
        throw ClassificationConflict(std::string("local label ") + to_string(local.label) +
                                     " vs certified " + to_string(g.label) +
                                     " (a1=" + std::to_string(a1) + ")");
    return g;
}

}  // namespace heg
