#include <doctest.h>

#include <cmath>

#include "heg/linalg6.hpp"
#include "heg/vec.hpp"

#include "util.hpp"

using namespace heg;

TEST_CASE("perp rotates counterclockwise by a quarter turn") {
    Vec2 e1{1.0, 0.0};
    CHECK(perp(e1).x == 0.0);
    CHECK(perp(e1).y == 1.0);
    Vec2 e2{0.0, 1.0};
    CHECK(perp(e2).x == -1.0);
    CHECK(perp(e2).y == 0.0);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Vec2 w{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)};
        CHECK(dot(w, perp(w)) == 0.0);  // same product with opposite signs
        CHECK(cross(w, perp(w)) == doctest::Approx(dot(w, w)).epsilon(1e-15));
    }
}

TEST_CASE("rotation matrix agrees with rotate and preserves norms") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        double a = testutil::uniform(rng, -7, 7);
        Vec2 w{testutil::uniform(rng, -3, 3), testutil::uniform(rng, -3, 3)};
        Vec2 r1 = rotation(a) * w;
        Vec2 r2 = rotate(a, w);
        CHECK(norm(r1 - r2) <= 1e-14);
        CHECK(norm(r1) == doctest::Approx(norm(w)).epsilon(1e-13));
        Vec2 back = rotate(-a, r1);
        CHECK(norm(back - w) <= 1e-13);
    }
}

TEST_CASE("normalize_angle lands in [0, 2pi)") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        double a = testutil::uniform(rng, -50, 50);
        double n = normalize_angle(a);
        CHECK(n >= 0.0);
        CHECK(n < testutil::kTau);
        CHECK(std::fabs(std::sin(n) - std::sin(a)) <= 1e-12);
        CHECK(std::fabs(std::cos(n) - std::cos(a)) <= 1e-12);
    }
}

TEST_CASE("jacobi eigenvalues of a known symmetric matrix") {
    // diag(1,2,3) conjugated by a rotation in the (0,2) plane keeps spectrum
    double c = std::cos(0.6), s = std::sin(0.6);
    std::vector<double> m = {
        c * c * 1 + s * s * 3, 0, c * s * (3 - 1),
        0, 2, 0,
        c * s * (3 - 1), 0, s * s * 1 + c * c * 3,
    };
    auto ev = jacobi_eigenvalues(m, 3);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Mat6 product and identity") {
    Mat6 I = Mat6::identity();
    Mat6 A;
    std::mt19937_64 rng(14);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A(i, j) = testutil::uniform(rng, -1, 1);
    Mat6 AI = A * I;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(AI(i, j) == A(i, j));
    Vec6 x{1, -2, 3, -4, 5, -6};
    Vec6 y = A * x;
    double manual = 0.0;
    for (int j = 0; j < 6; ++j) manual += A(2, j) * x[static_cast<size_t>(j)];
    CHECK(y[2] == doctest::Approx(manual).epsilon(1e-15));
}
