#pragma once

// Central tolerance record. All numerical bands used by the library live here;
// tests pin against these same constants.
namespace heg::tol {

inline constexpr double geom = 1e-8;      // boundary / tangency residuals
inline constexpr double dca = 1e-10;      // closest-approach bisection width
inline constexpr double cls = 1e-9;       // classification band on a1, a2
inline constexpr double overlap = 1e-8;   // intersection area units
inline constexpr double taylor = 1e-9;    // a1 vs 2|Ep|*(nu.U) collinearity bridge

// Level-function band for the tangency predicate. Must sit well above the
// evaluation noise floor (~1e-13 for the largest admissible bodies) and well
// below the level change produced by a 1e-9 separation shift.
inline constexpr double value_band = 1e-11;

}  // namespace heg::tol
