#pragma once

#include <utility>

#include "heg/geometry.hpp"
#include "heg/linalg6.hpp"

namespace heg {

// Constant rigid velocities of the pair, ordered [v1, v2, vbar1, vbar2, omega, omegabar].
struct Velocity6 {
    Vec2 v{};
    Vec2 vbar{};
    double omega = 0.0;
    double omegabar = 0.0;

    Vec6 to_array() const { return {v.x, v.y, vbar.x, vbar.y, omega, omegabar}; }

    static Velocity6 from_array(const Vec6& a) {
        return {{a[0], a[1]}, {a[2], a[3]}, a[4], a[5]};
    }

    double norm() const { return norm6(to_array()); }
};

// Poses at time t for constant-velocity motion from the contact configuration
// at separation d: body 1 from the origin, body 2 from d e(psi) with initial
// rotation theta.
inline std::pair<Pose, Pose> poses_at(const Beta& beta, double d, const Velocity6& U,
                                      double t) {
    Pose a{t * U.v, t * U.omega};
    Pose b{d * unit_from_angle(beta.psi) + t * U.vbar, beta.theta + t * U.omegabar};
    return {a, b};
}

}  // namespace heg
