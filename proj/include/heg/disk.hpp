#pragma once

#include "heg/germs.hpp"

namespace heg {

// Exact quadratic data for the disk tracking function:
//   Phi(t) = |x(t) - xbar(t)|^2 - 1 = (gamma.U) t + (U.AU) t^2,  identically.
struct DiskQuadratic {
    Vec6 gamma{};
    Mat6 A;
};

// gamma = (-2n, 2n, 0, 0) for contact normal n = e(psi); A acts as
// |v - vbar|^2 on the linear block and ignores the angular coordinates.
DiskQuadratic disk_quadratic(const Beta& beta);

// Separation between two radius-1/2 disks starting at contact (d = 1).
double tracking_phi(const Beta& beta, const Velocity6& U, double t);

// Exact sign trichotomy of gamma.U; never Inadmissible or Undetermined since
// the quadratic coefficient |v - vbar|^2 is nonnegative. Evidence carries the
// exact polynomial coefficients: a1 = gamma.U, a2 = 2 U.AU.
GermClass classify_disk(const Beta& beta, const Velocity6& U);

}  // namespace heg
