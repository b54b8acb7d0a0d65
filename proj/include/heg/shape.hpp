#pragma once

#include <stdexcept>

#include "heg/vec.hpp"

namespace heg {

enum class ShapeKind { Disk, Ellipse };

// Reference bodies, unit density:
//   Disk:    radius 1/2, level set 4|y|^2 - 1.
//   Ellipse: semi-axes (1/eps, 1), level set (eps*y1)^2 + y2^2 - 1, 0 < eps < 1.
struct Shape {
    ShapeKind kind = ShapeKind::Disk;
    double epsilon = 0.0;

    static Shape disk() { return {ShapeKind::Disk, 0.0}; }

    static Shape ellipse(double eps) {
        if (!(eps > 0.0) || !(eps < 1.0))
            throw std::invalid_argument("ellipse parameter must satisfy 0 < eps < 1");
        return {ShapeKind::Ellipse, eps};
    }
};

// Diagonal of the quadratic-form matrix E with F0(y) = y.Ey - 1.
inline Vec2 shape_matrix_diag(const Shape& s) {
    if (s.kind == ShapeKind::Disk) return {4.0, 4.0};
    return {s.epsilon * s.epsilon, 1.0};
}

inline double semi_major(const Shape& s) {
    return s.kind == ShapeKind::Disk ? 0.5 : 1.0 / s.epsilon;
}

inline double semi_minor(const Shape& s) { return s.kind == ShapeKind::Disk ? 0.5 : 1.0; }

inline double body_diameter(const Shape& s) { return 2.0 * semi_major(s); }

// Boundary point at parameter u: (a cos u, b sin u) in the body frame.
inline Vec2 boundary_point(const Shape& s, double u) {
    return {semi_major(s) * std::cos(u), semi_minor(s) * std::sin(u)};
}

// Parameter of a body-frame boundary point (inverse of boundary_point).
inline double boundary_parameter(const Shape& s, Vec2 p) {
    return std::atan2(p.y / semi_minor(s), p.x / semi_major(s));
}

// Unique boundary point whose outward normal is w: E^{-1}w / sqrt(w.E^{-1}w).
inline Vec2 boundary_point_from_normal(const Shape& s, Vec2 w) {
    Vec2 e = shape_matrix_diag(s);
    Vec2 ew{w.x / e.x, w.y / e.y};
    double scale = std::sqrt(dot(w, ew));
    return {ew.x / scale, ew.y / scale};
}

struct Pose {
    Vec2 c{0.0, 0.0};
    double angle = 0.0;
};

// F0(R(angle)^T (y - center)): negative inside, zero on the boundary.
inline double level_value(const Shape& s, const Pose& pose, Vec2 y) {
    Vec2 z = rotate(-pose.angle, y - pose.c);
    Vec2 e = shape_matrix_diag(s);
    return e.x * z.x * z.x + e.y * z.y * z.y - 1.0;
}

}  // namespace heg
