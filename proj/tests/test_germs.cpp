#include <doctest.h>

#include <cmath>

#include "heg/counterexample.hpp"
#include "heg/germs.hpp"
#include "heg/oracle.hpp"
#include "heg/tolerances.hpp"

#include "util.hpp"

using namespace heg;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// Stacked tangency: contact at the top of body 1, second body above it.
std::pair<Beta, ContactData> stacked(const Shape& s) {
    return config_from_contact(s, kPi / 2, 0.0);
}

}  // namespace

TEST_CASE("Taylor coefficients at hand-checked configurations") {
    Shape s = Shape::ellipse(0.5);
    auto [beta, contact] = stacked(s);

    CHECK(psi_dot0(s, contact, Velocity6{}) == 0.0);
    CHECK(psi_ddot0(s, contact, Velocity6{}) == 0.0);

    Velocity6 up{{0, 0}, {0, 1}, 0, 0};
    CHECK(std::fabs(psi_dot0(s, contact, up) - 2.0) <= 1e-12);
    CHECK(std::fabs(psi_ddot0(s, contact, up) - 2.0) <= 1e-12);

    Shape s3 = Shape::ellipse(0.3);
    auto [beta3, contact3] = stacked(s3);
    Velocity6 star{{0, 0}, {91.0 / 9.0, 0}, 1, 0};
    CHECK(std::fabs(psi_dot0(s3, contact3, star)) <= 1e-12);
    CHECK(std::fabs(psi_ddot0(s3, contact3, star) + 182.0 / 9.0) <= 1e-10);
    (void)beta;
    (void)beta3;
}

TEST_CASE("closed-form coefficients match finite differences of the tracked level") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        Shape s = Shape::ellipse(testutil::uniform(rng, 0.15, 0.85));
        Beta beta = testutil::random_beta(rng);
        ContactData contact = contact_data(s, beta);
        Velocity6 U = testutil::random_velocity(rng);
        auto psi = [&](double t) { return tracking_psi(s, beta, contact, U, t); };
        double fd1 = finite_difference(psi, 0.0, 1, 1e-5);
        double fd2 = finite_difference(psi, 0.0, 2, 1e-5);
        CHECK(std::fabs(psi_dot0(s, contact, U) - fd1) <= 1e-6);
        CHECK(std::fabs(psi_ddot0(s, contact, U) - fd2) <= 1e-4);
    }
}

TEST_CASE("tracked level matches an independent implementation") {
    Shape s = Shape::ellipse(0.3);
    Beta beta{0.7, 1.1};
    ContactData contact = contact_data(s, beta);
    Velocity6 U{{0.3, -0.2}, {0.1, 0.4}, 0.7, -0.5};
    CHECK(std::fabs(tracking_psi(s, beta, contact, U, 0.05) - 0.21626299992168496) <= 1e-10);
    CHECK(std::fabs(tracking_psi(s, beta, contact, U, -0.13) + 0.42995661619688508) <= 1e-10);
    CHECK(std::fabs(tracking_psi(s, beta, contact, U, 0.0)) <= 1e-12);
}

TEST_CASE("first coefficient is collinear with the collision direction") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        Shape s = Shape::ellipse(testutil::uniform(rng, 0.15, 0.85));
        ContactData contact = contact_data(s, testutil::random_beta(rng));
        Velocity6 U = testutil::random_velocity(rng);
        Vec2 e = shape_matrix_diag(s);
        double ep_norm = norm(Vec2{e.x * contact.p.x, e.y * contact.p.y});
        double nu_dot = dot6(nu_vector(contact), U.to_array());
        CHECK(std::fabs(psi_dot0(s, contact, U) - 2.0 * ep_norm * nu_dot) <= 1e-9);
    }
}

TEST_CASE("labels are invariant under positive velocity scaling") {
    std::mt19937_64 rng(43);
    Shape s = Shape::ellipse(0.4);
    for (int i = 0; i < 50; ++i) {
        ContactData contact = contact_data(s, testutil::random_beta(rng));
        Velocity6 U = testutil::random_velocity(rng);
        GermLabel base = classify_local(s, contact, U).label;
        for (double c : {0.1, 10.0}) {
            Velocity6 scaled{c * U.v, c * U.vbar, c * U.omega, c * U.omegabar};
            CHECK(classify_local(s, contact, scaled).label == base);
        }
    }
}

TEST_CASE("local classification of the canonical examples") {
    Shape s = Shape::ellipse(0.5);
    auto [beta, contact] = stacked(s);
    CHECK(classify_local(s, contact, Velocity6{{0, 0}, {0, -1}, 0, 0}).label == GermLabel::Pre);
    CHECK(classify_local(s, contact, Velocity6{{0, 0}, {0, 1}, 0, 0}).label == GermLabel::Post);

    Shape s3 = Shape::ellipse(0.3);
    auto [beta3, contact3] = stacked(s3);
    Velocity6 star = special_velocity(0.3, contact3);
    GermClass g = classify_local(s3, contact3, star);
    CHECK(g.label == GermLabel::Inadmissible);
    CHECK(std::fabs(g.evidence.nuDotU) <= 1e-12);
    (void)beta;
    (void)beta3;
}

TEST_CASE("certified classification agrees on the canonical examples") {
    Shape s = Shape::ellipse(0.5);
    auto [beta, contact] = stacked(s);
    (void)contact;
    CHECK(classify_certified(s, beta, Velocity6{{0, 0}, {0, -1}, 0, 0}, 1e-2, 64).label ==
          GermLabel::Pre);
    CHECK(classify_certified(s, beta, Velocity6{{0, 0}, {0, 1}, 0, 0}, 1e-2, 64).label ==
          GermLabel::Post);
    CHECK(classify_certified(s, beta, Velocity6{}, 1e-2, 64).label == GermLabel::Grazing);

    Shape s3 = Shape::ellipse(0.3);
    auto [beta3, contact3] = stacked(s3);
    Velocity6 star = special_velocity(0.3, contact3);
    CHECK(classify_certified(s3, beta3, star, 1e-2, 64).label == GermLabel::Inadmissible);
}

TEST_CASE("local and certified labels agree where the scan resolves the linear term") {
    std::mt19937_64 rng(44);
    Shape s = Shape::ellipse(0.45);
    const double horizon = 1e-3;
    int tested = 0;
    while (tested < 60) {
        Beta beta = testutil::random_beta(rng);
        ContactData contact = contact_data(s, beta);
        Velocity6 U = testutil::random_velocity(rng);
        GermClass local = classify_local(s, contact, U);
        // linear-domination regime: the window shows the sign of a1 only when
        // |a1| controls |a2| t over the whole horizon
        if (std::fabs(local.evidence.a1) < 0.05) continue;
        if (std::fabs(local.evidence.a2) * horizon > 0.4 * std::fabs(local.evidence.a1))
            continue;
        ++tested;
        GermClass cert = classify_certified(s, beta, U, horizon, 16);
        CHECK(cert.label == local.label);
    }
}

TEST_CASE("negative tracked level implies the overlap predicate fires") {
    Certificate cert = find_inadmissible(0.3);
    Shape s = Shape::ellipse(0.3);
    for (double frac : {-0.5, -0.125, 0.125, 0.5}) {
        double t = frac * cert.delta;
        double level = tracking_psi(s, cert.beta, cert.contact, cert.Ustar, t);
        CHECK(level < 0.0);
        auto [pa, pb] = poses_at(cert.beta, cert.contact.d, cert.Ustar, t);
        CHECK(overlap_test(s, pa, pb) == OverlapStatus::Overlapping);
    }
}
