#include "heg/disk.hpp"

namespace heg {

DiskQuadratic disk_quadratic(const Beta& beta) {
    Vec2 n = unit_from_angle(beta.psi);
    DiskQuadratic d;
    d.gamma = {-2.0 * n.x, -2.0 * n.y, 2.0 * n.x, 2.0 * n.y, 0.0, 0.0};
    for (int i = 0; i < 4; ++i) d.A(i, i) = 1.0;
    d.A(0, 2) = d.A(2, 0) = -1.0;
    d.A(1, 3) = d.A(3, 1) = -1.0;
    return d;
}

double tracking_phi(const Beta& beta, const Velocity6& U, double t) {
    Vec2 x = t * U.v;
    Vec2 xbar = unit_from_angle(beta.psi) + t * U.vbar;
    Vec2 r = x - xbar;
    return dot(r, r) - 1.0;
}

GermClass classify_disk(const Beta& beta, const Velocity6& U) {
    DiskQuadratic dq = disk_quadratic(beta);
    Vec6 u = U.to_array();
    double a1 = dot6(dq.gamma, u);
    Vec2 dv = U.v - U.vbar;

    GermClass g;
    g.evidence.a1 = a1;
    g.evidence.a2 = 2.0 * dot(dv, dv);  // 2 U.AU
    g.evidence.nuDotU = 0.5 * a1;       // nu = (-n, n, 0, 0) = gamma/2
    if (a1 < 0.0)
        g.label = GermLabel::Pre;
    else if (a1 > 0.0)
        g.label = GermLabel::Post;
    else
        g.label = GermLabel::Grazing;
    return g;
}

}  // namespace heg
