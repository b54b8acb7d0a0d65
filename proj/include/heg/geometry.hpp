#pragma once

#include <utility>

#include "heg/shape.hpp"

namespace heg {

// Collision configuration: body 1 at the origin, unrotated; body 2 rotated by
// theta with its center at distance d along e(psi).
struct Beta {
    double theta = 0.0;
    double psi = 0.0;
};

enum class OverlapStatus { Disjoint, Tangent, Overlapping };

// Tangency data at separation d: contact point p (on both boundaries), its
// conjugate q = d e(psi) - p, outward normal n = Ep/|Ep| of body 1 at p, and
// the boundary parameter u of p on the reference body.
struct ContactData {
    double d = 0.0;
    Vec2 p{};
    Vec2 q{};
    Vec2 n{};
    double u = 0.0;
};

// Overlapping iff the intersection has positive area; Tangent iff the
// boundaries touch with disjoint interiors. Global minimization of A's level
// function over B's boundary plus mutual center-containment checks.
OverlapStatus overlap_test(const Shape& s, const Pose& a, const Pose& b);

// Distance of closest approach along e(psi): bisection on overlap_test over
// [0, 2*diameter], valid because the overlapping separations form an interval.
double closest_approach_distance(const Shape& s, const Beta& beta);

// Contact data at separation closest_approach_distance(beta). p is the argmin
// of body 1's level function over body 2's boundary, refined to stationarity.
// Throws ContactDegenerate if the tangency residual exceeds tol::geom.
ContactData contact_data(const Shape& s, const Beta& beta);

// Constructive inverse: configuration whose contact point is the boundary
// point at parameter u, with body 2 rotated by theta.
std::pair<Beta, ContactData> config_from_contact(const Shape& s, double u, double theta);

}  // namespace heg
