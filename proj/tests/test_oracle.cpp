#include <doctest.h>

#include <cmath>

#include "heg/counterexample.hpp"
#include "heg/oracle.hpp"
#include "heg/tolerances.hpp"

#include "util.hpp"

using namespace heg;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

TEST_CASE("full-body areas at identical poses") {
    Shape e = Shape::ellipse(0.5);
    double area = overlap_area(e, Pose{}, Pose{}, 512);
    CHECK(std::fabs(area - kPi / 0.5) <= 0.01 * kPi / 0.5);

    Shape d = Shape::disk();
    double disk_area = overlap_area(d, Pose{}, Pose{}, 512);
    CHECK(std::fabs(disk_area - kPi / 4.0) <= 0.01 * kPi / 4.0);
}

TEST_CASE("tangent configuration has zero area") {
    Shape s = Shape::ellipse(0.3);
    CHECK(overlap_area(s, Pose{}, Pose{{0.0, 2.0}, 0.0}, 512) == 0.0);
    CHECK(overlap_area(s, Pose{}, Pose{{0.0, 2.5}, 0.0}, 512) == 0.0);
}

TEST_CASE("stacked lens areas match an independent implementation") {
    Shape s = Shape::ellipse(0.3);
    AreaResult shallow = overlap_area_detail(s, Pose{}, Pose{{0.0, 1.99}, 0.0}, 512);
    AreaResult deep = overlap_area_detail(s, Pose{}, Pose{{0.0, 1.90}, 0.0}, 512);
    CHECK(std::fabs(shallow.area - 0.00444110962714) <= 2e-6);
    CHECK(std::fabs(deep.area - 0.139486829083) <= 5e-5);
    CHECK(deep.area > shallow.area);
    CHECK(shallow.area > 0.0);
}

TEST_CASE("quadrature error estimate shrinks with resolution") {
    std::mt19937_64 rng(31);
    Shape s = Shape::ellipse(0.35);
    int used = 0;
    double coarseTotal = 0.0, fineTotal = 0.0;
    while (used < 8) {
        Pose a{{testutil::uniform(rng, -1, 1), testutil::uniform(rng, -1, 1)},
               testutil::uniform(rng) * testutil::kTau};
        Pose b{{testutil::uniform(rng, -1, 1), testutil::uniform(rng, -1, 1)},
               testutil::uniform(rng) * testutil::kTau};
        AreaResult coarse = overlap_area_detail(s, a, b, 128);
        if (coarse.area <= 0.01) continue;  // want genuinely overlapping pairs
        AreaResult fine = overlap_area_detail(s, a, b, 512);
        ++used;
        // per pair never worse; the Richardson difference is noisy, so the
        // 4x resolution step is held to 3x shrink only in aggregate
        CHECK(fine.error_estimate < coarse.error_estimate);
        coarseTotal += coarse.error_estimate;
        fineTotal += fine.error_estimate;
    }
    CHECK(fineTotal <= coarseTotal / 3.0);
}

TEST_CASE("quadrature agrees with the overlap predicate away from tangency") {
    std::mt19937_64 rng(32);
    Shape s = Shape::ellipse(0.35);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        Pose a{{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)},
               testutil::uniform(rng) * testutil::kTau};
        Pose b{{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)},
               testutil::uniform(rng) * testutil::kTau};
        OverlapStatus pred = overlap_test(s, a, b);
        double area = overlap_area(s, a, b, 256);
        if (pred == OverlapStatus::Tangent) continue;
        if (area > 0.0 && area <= 1e-6) continue;  // tangency band
        ++checked;
        CHECK((pred == OverlapStatus::Overlapping) == (area > 0.0));
    }
    CHECK(checked >= 450);  // the band is thin; nearly every draw must count
}

TEST_CASE("areas are deterministic") {
    Shape s = Shape::ellipse(0.3);
    Pose a{{0.2, -0.4}, 1.3};
    Pose b{{-0.5, 0.8}, 2.9};
    double first = overlap_area(s, a, b, 256);
    for (int i = 0; i < 3; ++i) CHECK(overlap_area(s, a, b, 256) == first);
}

TEST_CASE("time scan flags and statuses") {
    Shape s = Shape::ellipse(0.5);
    Beta stacked{0.0, kPi / 2};

    SUBCASE("static tangency stays tangent") {
        ScanResult r = time_scan(s, stacked, Velocity6{}, 0.1, 8);
        CHECK(r.cleanNegative);
        CHECK(r.cleanPositive);
        for (const ScanSample& smp : r.samples) CHECK(smp.status == OverlapStatus::Tangent);
        CHECK(r.samples.size() == 17);
        for (size_t i = 1; i < r.samples.size(); ++i)
            CHECK(r.samples[i].t > r.samples[i - 1].t);
    }

    SUBCASE("separating velocity is clean forward, dirty backward") {
        Velocity6 U{{0.0, 0.0}, {0.0, 1.0}, 0.0, 0.0};
        ScanResult r = time_scan(s, stacked, U, 0.1, 8);
        CHECK(r.cleanPositive);
        CHECK_FALSE(r.cleanNegative);
    }

    SUBCASE("certificate velocity is dirty on both sides") {
        Certificate cert = find_inadmissible(0.3);
        Shape e = Shape::ellipse(0.3);
        ScanResult r = time_scan_at(e, cert.beta, cert.contact.d, cert.Ustar, cert.delta, 16,
                                    256);
        CHECK_FALSE(r.cleanNegative);
        CHECK_FALSE(r.cleanPositive);
        CHECK(r.withAreas);
        for (const ScanSample& smp : r.samples)
            if (smp.t != 0.0) {
                CHECK(smp.status == OverlapStatus::Overlapping);
                CHECK(smp.area > tol::overlap);
            }
    }
}

TEST_CASE("time scan validates its inputs") {
    Shape s = Shape::ellipse(0.5);
    CHECK_THROWS_AS(time_scan(s, Beta{}, Velocity6{}, -0.1, 8), std::invalid_argument);
    CHECK_THROWS_AS(time_scan(s, Beta{}, Velocity6{}, 0.1, 4), std::invalid_argument);
}

TEST_CASE("finite differences of polynomials") {
    auto square = [](double t) { return t * t; };
    CHECK(std::fabs(finite_difference(square, 0.0, 2, 1e-4) - 2.0) <= 1e-6);
    auto cube = [](double t) { return t * t * t; };
    CHECK(std::fabs(finite_difference(cube, 0.0, 1, 1e-4)) <= 1e-7);
    auto affine = [](double t) { return 3.0 - 7.0 * t; };
    CHECK(std::fabs(finite_difference(affine, 0.4, 1, 1e-4) + 7.0) <= 1e-9);
    CHECK(std::fabs(finite_difference(affine, 0.4, 2, 1e-4)) <= 1e-6);
}
