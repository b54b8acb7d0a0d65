#include "heg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "heg/tolerances.hpp"

namespace heg {
namespace {

struct Box {
    Vec2 lo{}, hi{};
    bool empty = true;
};

Box intersect(const Box& a, const Box& b) {
    if (a.empty || b.empty) return {};
    Box r;
    r.lo = {std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)};
    r.hi = {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)};
    r.empty = !(r.lo.x <= r.hi.x && r.lo.y <= r.hi.y);
    return r;
}

// Trigonometric form of the world boundary: x(u) = cx + A1 cos u + B1 sin u,
// y(u) = cy + A2 cos u + B2 sin u.
struct BoundaryCurve {
    Vec2 c{};
    double A1, B1, A2, B2;
};

BoundaryCurve make_curve(const Shape& s, const Pose& pose) {
    double ca = std::cos(pose.angle), sa = std::sin(pose.angle);
    double a = semi_major(s), b = semi_minor(s);
    return {pose.c, a * ca, -b * sa, a * sa, b * ca};
}

Box world_bbox(const Shape& s, const Pose& pose, double margin) {
    BoundaryCurve bc = make_curve(s, pose);
    double hx = std::sqrt(bc.A1 * bc.A1 + bc.B1 * bc.B1) * margin;
    double hy = std::sqrt(bc.A2 * bc.A2 + bc.B2 * bc.B2) * margin;
    return {{bc.c.x - hx, bc.c.y - hy}, {bc.c.x + hx, bc.c.y + hy}, false};
}

// Exact bounding box of (convex body) ∩ (axis-aligned box): extrema occur at
// the body's own axis-extreme points, at boundary crossings with the box edge
// lines, or at box corners interior to the body.
Box clip_bbox(const Shape& s, const Pose& pose, const Box& box) {
    if (box.empty) return {};
    BoundaryCurve bc = make_curve(s, pose);
    double rx = std::sqrt(bc.A1 * bc.A1 + bc.B1 * bc.B1);
    double ry = std::sqrt(bc.A2 * bc.A2 + bc.B2 * bc.B2);
    double slack = 1e-12 * (1.0 + rx + ry);

    Vec2 pts[20];
    int npts = 0;
    auto push = [&](Vec2 p) {
        if (p.x < box.lo.x - slack || p.x > box.hi.x + slack) return;
        if (p.y < box.lo.y - slack || p.y > box.hi.y + slack) return;
        pts[npts++] = {std::clamp(p.x, box.lo.x, box.hi.x), std::clamp(p.y, box.lo.y, box.hi.y)};
    };

    // Axis-extreme points of the body.
    if (rx > 0.0) {
        Vec2 dir{bc.A1 / rx, bc.B1 / rx};  // (cos u, sin u) maximizing x
        double yoff = (bc.A2 * dir.x + bc.B2 * dir.y);
        push({bc.c.x + rx, bc.c.y + yoff});
        push({bc.c.x - rx, bc.c.y - yoff});
    }
    if (ry > 0.0) {
        Vec2 dir{bc.A2 / ry, bc.B2 / ry};
        double xoff = (bc.A1 * dir.x + bc.B1 * dir.y);
        push({bc.c.x + xoff, bc.c.y + ry});
        push({bc.c.x - xoff, bc.c.y - ry});
    }

    // Boundary crossings with the four box edge lines.
    auto cross_line = [&](double A, double B, double r, double rhs, bool xline) {
        if (r <= 0.0 || std::fabs(rhs) > r) return;
        double phi = std::atan2(B, A);
        double delta = std::acos(std::clamp(rhs / r, -1.0, 1.0));
        for (double uu : {phi + delta, phi - delta}) {
            double cu = std::cos(uu), su = std::sin(uu);
            Vec2 p{bc.c.x + bc.A1 * cu + bc.B1 * su, bc.c.y + bc.A2 * cu + bc.B2 * su};
            (void)xline;
            push(p);
        }
    };
    cross_line(bc.A1, bc.B1, rx, box.lo.x - bc.c.x, true);
    cross_line(bc.A1, bc.B1, rx, box.hi.x - bc.c.x, true);
    cross_line(bc.A2, bc.B2, ry, box.lo.y - bc.c.y, false);
    cross_line(bc.A2, bc.B2, ry, box.hi.y - bc.c.y, false);

    // Box corners inside the body.
    for (Vec2 corner : {Vec2{box.lo.x, box.lo.y}, Vec2{box.lo.x, box.hi.y},
                        Vec2{box.hi.x, box.lo.y}, Vec2{box.hi.x, box.hi.y}})
        if (level_value(s, pose, corner) <= 0.0) push(corner);

    if (npts == 0) return {};
    Box r{pts[0], pts[0], false};
    for (int i = 1; i < npts; ++i) {
        r.lo.x = std::min(r.lo.x, pts[i].x);
        r.lo.y = std::min(r.lo.y, pts[i].y);
        r.hi.x = std::max(r.hi.x, pts[i].x);
        r.hi.y = std::max(r.hi.y, pts[i].y);
    }
    return r;
}

// body-frame level evaluation cached as an affine transform
struct LevelEval {
    double ca, sa;
    Vec2 c;
    double e1, e2;

    double operator()(double x, double y) const {
        double dx = x - c.x, dy = y - c.y;
        double z1 = ca * dx + sa * dy;
        double z2 = -sa * dx + ca * dy;
        return e1 * z1 * z1 + e2 * z2 * z2 - 1.0;
    }
};

LevelEval make_eval(const Shape& s, const Pose& pose) {
    Vec2 e = shape_matrix_diag(s);
    return {std::cos(pose.angle), std::sin(pose.angle), pose.c, e.x, e.y};
}

double grid_count_area(const LevelEval& fa, const LevelEval& fb, const Box& box, int res) {
    double w = box.hi.x - box.lo.x, h = box.hi.y - box.lo.y;
    if (!(w > 0.0) || !(h > 0.0)) return 0.0;
    double hx = w / res, hy = h / res;
    std::int64_t count = 0;
    for (int iy = 0; iy < res; ++iy) {
        double y = box.lo.y + (iy + 0.5) * hy;
        for (int ix = 0; ix < res; ++ix) {
            double x = box.lo.x + (ix + 0.5) * hx;
            if (fa(x, y) < 0.0 && fb(x, y) < 0.0) ++count;
        }
    }
    return static_cast<double>(count) * hx * hy;
}

}  // namespace

AreaResult overlap_area_detail(const Shape& s, const Pose& a, const Pose& b, int resolution) {
    if (resolution < 64) throw std::invalid_argument("overlap_area resolution must be >= 64");
    Box box = intersect(world_bbox(s, a, 1.05), world_bbox(s, b, 1.05));
    for (int it = 0; it < 3 && !box.empty; ++it)
        box = intersect(clip_bbox(s, a, box), clip_bbox(s, b, box));
    if (box.empty) return {0.0, 0.0};

    LevelEval fa = make_eval(s, a), fb = make_eval(s, b);
    double coarse = grid_count_area(fa, fb, box, resolution);
    double fine = grid_count_area(fa, fb, box, 2 * resolution);
    AreaResult r{fine, std::fabs(fine - coarse)};
    if (r.area <= tol::overlap) r.area = 0.0;
    return r;
}

double overlap_area(const Shape& s, const Pose& a, const Pose& b, int resolution) {
    return overlap_area_detail(s, a, b, resolution).area;
}

ScanResult time_scan_at(const Shape& s, const Beta& beta, double d, const Velocity6& U,
                        double horizon, int samples, int area_resolution) {
    if (!(horizon > 0.0)) throw std::invalid_argument("time_scan horizon must be positive");
    if (samples < 8) throw std::invalid_argument("time_scan needs samples >= 8");
    ScanResult r;
    r.withAreas = area_resolution > 0;
    r.samples.reserve(static_cast<size_t>(2 * samples + 1));
    for (int j = -samples; j <= samples; ++j) {
        double t = horizon * j / samples;
        auto [pa, pb] = poses_at(beta, d, U, t);
        ScanSample sample;
        sample.t = t;
        sample.status = overlap_test(s, pa, pb);
        if (r.withAreas && sample.status == OverlapStatus::Overlapping)
            sample.area = overlap_area(s, pa, pb, area_resolution);
        if (sample.status == OverlapStatus::Overlapping) {
            if (j < 0) r.cleanNegative = false;
            if (j > 0) r.cleanPositive = false;
        }
        r.samples.push_back(sample);
    }
    return r;
}

ScanResult time_scan(const Shape& s, const Beta& beta, const Velocity6& U, double horizon,
                     int samples, int area_resolution) {
    return time_scan_at(s, beta, closest_approach_distance(s, beta), U, horizon, samples,
                        area_resolution);
}

double finite_difference(const std::function<double(double)>& f, double t0, int order,
                         double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_difference step must be positive");
    if (order == 1) return (f(t0 + h) - f(t0 - h)) / (2.0 * h);
    if (order == 2) return (f(t0 + h) - 2.0 * f(t0) + f(t0 - h)) / (h * h);
    throw std::invalid_argument("finite_difference order must be 1 or 2");
}

}  // namespace heg
