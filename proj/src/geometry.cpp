#include "heg/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "heg/errors.hpp"
#include "heg/tolerances.hpp"

namespace heg {
namespace {

constexpr int kScanSamples = 256;
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

struct CircleTable {
    std::array<double, kScanSamples> c{};
    std::array<double, kScanSamples> s{};
    CircleTable() {
        for (int i = 0; i < kScanSamples; ++i) {
            double u = kTwoPi * i / kScanSamples;
            c[static_cast<size_t>(i)] = std::cos(u);
            s[static_cast<size_t>(i)] = std::sin(u);
        }
    }
};

const CircleTable& circle_table() {
    static const CircleTable t;
    return t;
}

// Affine map from B's boundary parameter to A's body frame, with A's level
// evaluated as e1*z1^2 + e2*z2^2 - 1. Body B's boundary point at parameter u
// is cB + R(angB) diag(a,b) (cos u, sin u).
struct BoundaryObjective {
    double t11, t12, t21, t22;
    Vec2 t0;
    double e1, e2;

    Vec2 point(double cu, double su) const {
        return {t11 * cu + t12 * su + t0.x, t21 * cu + t22 * su + t0.y};
    }

    double value(double cu, double su) const {
        Vec2 z = point(cu, su);
        return e1 * z.x * z.x + e2 * z.y * z.y - 1.0;
    }

    double value_at(double u) const { return value(std::cos(u), std::sin(u)); }

    // d/du of value: 2 E z . z'(u) with z'(u) = T(-sin u, cos u).
    double deriv_at(double u) const {
        double cu = std::cos(u), su = std::sin(u);
        Vec2 z = point(cu, su);
        Vec2 zp{-t11 * su + t12 * cu, -t21 * su + t22 * cu};
        return 2.0 * (e1 * z.x * zp.x + e2 * z.y * zp.y);
    }

    double second_deriv_at(double u) const {
        double cu = std::cos(u), su = std::sin(u);
        Vec2 z = point(cu, su);
        Vec2 zp{-t11 * su + t12 * cu, -t21 * su + t22 * cu};
        Vec2 zpp{z.x - t0.x, z.y - t0.y};  // z'' = -(z - t0)
        return 2.0 * (e1 * zp.x * zp.x + e2 * zp.y * zp.y) -
               2.0 * (e1 * z.x * zpp.x + e2 * z.y * zpp.y);
    }
};

BoundaryObjective make_objective(const Shape& s, const Pose& a, const Pose& b) {
    double ca = std::cos(a.angle), sa = std::sin(a.angle);
    double cb = std::cos(b.angle), sb = std::sin(b.angle);
    // R(-angA) R(angB)
    double r11 = ca * cb + sa * sb;
    double r12 = -(ca * sb - sa * cb);
    double r21 = ca * sb - sa * cb;
    double r22 = ca * cb + sa * sb;
    double axis_a = semi_major(s), axis_b = semi_minor(s);
    Vec2 dcenter = b.c - a.c;
    Vec2 e = shape_matrix_diag(s);
    BoundaryObjective m{};
    m.t11 = r11 * axis_a;
    m.t12 = r12 * axis_b;
    m.t21 = r21 * axis_a;
    m.t22 = r22 * axis_b;
    m.t0 = {ca * dcenter.x + sa * dcenter.y, -sa * dcenter.x + ca * dcenter.y};
    m.e1 = e.x;
    m.e2 = e.y;
    return m;
}

double golden_min(const BoundaryObjective& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f.value_at(x1), f2 = f.value_at(x2);
    for (int it = 0; it < 70; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f.value_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f.value_at(x2);
        }
    }
    return f1 < f2 ? f1 : f2;
}

// Global minimum of A's level over B's boundary: dense scan plus golden-section
// refinement of every scan-local minimum.
double boundary_min_level(const BoundaryObjective& f) {
    const CircleTable& tab = circle_table();
    std::array<double, kScanSamples> vals{};
    for (int i = 0; i < kScanSamples; ++i)
        vals[static_cast<size_t>(i)] =
            f.value(tab.c[static_cast<size_t>(i)], tab.s[static_cast<size_t>(i)]);

    double best = vals[0];
    constexpr double kStep = kTwoPi / kScanSamples;
    for (int i = 0; i < kScanSamples; ++i) {
        double prev = vals[static_cast<size_t>((i + kScanSamples - 1) % kScanSamples)];
        double next = vals[static_cast<size_t>((i + 1) % kScanSamples)];
        double cur = vals[static_cast<size_t>(i)];
        best = std::min(best, cur);
        if (cur <= prev && cur <= next) {
            double u = kStep * i;
            best = std::min(best, golden_min(f, u - kStep, u + kStep));
        }
    }
    return best;
}

Pose second_body_pose(const Beta& beta, double d) {
    return {d * unit_from_angle(beta.psi), beta.theta};
}

}  // namespace

OverlapStatus overlap_test(const Shape& s, const Pose& a, const Pose& b) {
    double fmin;
    if (s.kind == ShapeKind::Disk) {
        // The scan objective has a closed-form global minimum for disks: the
        // nearest boundary point of B to A's center lies on the center line.
        double r = norm(b.c - a.c);
        double t = r - 0.5;
        fmin = 4.0 * t * t - 1.0;
    } else {
        fmin = boundary_min_level(make_objective(s, a, b));
    }
    // Containment first: one body strictly inside the other has no boundary
    // crossing yet positive intersection area.
    if (level_value(s, a, b.c) < 0.0 || level_value(s, b, a.c) < 0.0)
        return OverlapStatus::Overlapping;
    if (fmin < -tol::value_band) return OverlapStatus::Overlapping;
    if (fmin <= tol::value_band) return OverlapStatus::Tangent;
    return OverlapStatus::Disjoint;
}

double closest_approach_distance(const Shape& s, const Beta& beta) {
    const Pose body1{};
    double lo = 0.0;
    double hi = 2.0 * body_diameter(s);
    while (hi - lo > tol::dca) {
        double mid = 0.5 * (lo + hi);
        if (overlap_test(s, body1, second_body_pose(beta, mid)) == OverlapStatus::Overlapping)
            lo = mid;
        else
            hi = mid;
    }
    // Bisection leaves a residual level of order tol::dca, wider than the
    // tangency band; Newton on the boundary-min level (smooth and strictly
    // increasing in d near tangency) takes it to machine precision.
    auto min_level = [&](double d) {
        if (s.kind == ShapeKind::Disk) {
            double t = d - 0.5;
            return 4.0 * t * t - 1.0;
        }
        return boundary_min_level(make_objective(s, body1, second_body_pose(beta, d)));
    };
    double d = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        double f = min_level(d);
        double h = 1e-6;
        double df = (min_level(d + h) - min_level(d - h)) / (2.0 * h);
        if (!(std::fabs(df) > 1e-9)) break;
        d -= f / df;
    }
    return d;
}

ContactData contact_data(const Shape& s, const Beta& beta) {
    double d = closest_approach_distance(s, beta);
    const Pose body1{};
    Pose body2 = second_body_pose(beta, d);
    BoundaryObjective f = make_objective(s, body1, body2);

    // Coarse argmin over B's boundary, then safeguarded Newton on the
    // stationarity condition f'(u) = 0. The value-only argmin locates u to
    // ~sqrt(eps); the derivative root restores full precision.
    const CircleTable& tab = circle_table();
    int ibest = 0;
    double vbest = f.value(tab.c[0], tab.s[0]);
    for (int i = 1; i < kScanSamples; ++i) {
        double v = f.value(tab.c[static_cast<size_t>(i)], tab.s[static_cast<size_t>(i)]);
        if (v < vbest) {
            vbest = v;
            ibest = i;
        }
    }
    constexpr double kStep = kTwoPi / kScanSamples;
    double ulo = kStep * (ibest - 1), uhi = kStep * (ibest + 1);
    constexpr double kInvPhi = 0.6180339887498949;
    for (int it = 0; it < 30; ++it) {
        double x1 = uhi - kInvPhi * (uhi - ulo);
        double x2 = ulo + kInvPhi * (uhi - ulo);
        if (f.value_at(x1) < f.value_at(x2))
            uhi = x2;
        else
            ulo = x1;
    }
    double u2 = 0.5 * (ulo + uhi);
    for (int it = 0; it < 12; ++it) {
        double g = f.deriv_at(u2);
        double gp = f.second_deriv_at(u2);
        if (!(gp > 0.0)) break;
        double step = g / gp;
        u2 -= step;
        if (std::fabs(step) < 1e-15) break;
    }

    Vec2 p_raw = f.point(std::cos(u2), std::sin(u2));
    double residual = std::fabs(f.e1 * p_raw.x * p_raw.x + f.e2 * p_raw.y * p_raw.y - 1.0);
    if (residual > tol::geom)
        throw ContactDegenerate("tangency residual " + std::to_string(residual) +
                                " exceeds tolerance");

    ContactData c;
    c.d = d;
    c.u = normalize_angle(boundary_parameter(s, p_raw));
    c.p = boundary_point(s, c.u);
    Vec2 e = shape_matrix_diag(s);
    c.n = normalized(Vec2{e.x * c.p.x, e.y * c.p.y});
    c.q = d * unit_from_angle(beta.psi) - c.p;

    if (std::fabs(level_value(s, body2, c.p)) > tol::geom)
        throw ContactDegenerate("contact point off the second body's boundary");
    Vec2 z2 = rotate(-body2.angle, c.p - body2.c);
    Vec2 n2 = rotate(body2.angle, normalized(Vec2{e.x * z2.x, e.y * z2.y}));
    if (norm(n2 + c.n) > tol::geom)
        throw ContactDegenerate("contact normals not anti-parallel");
    return c;
}

std::pair<Beta, ContactData> config_from_contact(const Shape& s, double u, double theta) {
    u = normalize_angle(u);
    theta = normalize_angle(theta);
    Vec2 p = boundary_point(s, u);
    Vec2 e = shape_matrix_diag(s);
    Vec2 n = normalized(Vec2{e.x * p.x, e.y * p.y});
    Vec2 w = rotate(-theta, -n);
    Vec2 qb = boundary_point_from_normal(s, w);
    Vec2 xbar = p - rotate(theta, qb);

    Beta beta{theta, normalize_angle(std::atan2(xbar.y, xbar.x))};
    ContactData c;
    c.d = norm(xbar);
    c.u = u;
    c.p = p;
    c.n = n;
    c.q = c.d * unit_from_angle(beta.psi) - p;
    return {beta, c};
}

}  // namespace heg
