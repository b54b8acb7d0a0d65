#pragma once

#include <functional>
#include <vector>

#include "heg/geometry.hpp"
#include "heg/velocity.hpp"

namespace heg {

struct AreaResult {
    double area = 0.0;
    double error_estimate = 0.0;
};

// Intersection area by midpoint counting on a grid over the (iteratively
// clipped) intersection of the bodies' bounding boxes. The grid is evaluated
// at resolution and 2x resolution; the finer value is returned and the
// difference reported as the error estimate. Purely integer counting, so the
// result is deterministic. Areas at or below tol::overlap collapse to 0.
AreaResult overlap_area_detail(const Shape& s, const Pose& a, const Pose& b, int resolution);

double overlap_area(const Shape& s, const Pose& a, const Pose& b, int resolution);

struct ScanSample {
    double t = 0.0;
    OverlapStatus status = OverlapStatus::Tangent;
    double area = 0.0;
};

struct ScanResult {
    std::vector<ScanSample> samples;  // sorted by t
    bool cleanNegative = true;        // no Overlapping status at any t < 0
    bool cleanPositive = true;
    bool withAreas = false;  // area fields populated (area_resolution > 0)
};

// Overlap status along the constant-velocity trajectory at
// t = horizon*j/samples, j = -samples..samples. With area_resolution > 0 every
// Overlapping sample also carries its quadrature area.
ScanResult time_scan(const Shape& s, const Beta& beta, const Velocity6& U, double horizon,
                     int samples, int area_resolution = 0);

// Same scan with the separation already known (skips the bisection).
ScanResult time_scan_at(const Shape& s, const Beta& beta, double d, const Velocity6& U,
                        double horizon, int samples, int area_resolution = 0);

// Central finite difference of first or second order, error O(h^2).
double finite_difference(const std::function<double(double)>& f, double t0, int order,
                         double h);

}  // namespace heg
