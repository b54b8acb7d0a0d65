#pragma once

#include <random>

#include "heg/geometry.hpp"
#include "heg/velocity.hpp"

namespace testutil {

inline constexpr double kTau = 6.283185307179586476925286766559;

// Deterministic uniform in [0, 1) from the top 53 bits.
inline double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform(rng);
}

inline heg::Beta random_beta(std::mt19937_64& rng) {
    return {uniform(rng) * kTau, uniform(rng) * kTau};
}

inline heg::Velocity6 random_velocity(std::mt19937_64& rng, double scale = 2.0) {
    auto r = [&] { return uniform(rng, -scale, scale); };
    heg::Velocity6 U;
    U.v = {r(), r()};
    U.vbar = {r(), r()};
    U.omega = r();
    U.omegabar = r();
    return U;
}

}  // namespace testutil
