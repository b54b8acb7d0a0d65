#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heg/geometry.hpp"
#include "heg/velocity.hpp"

namespace heg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kCertificateVersion = 1;

struct OverlapSample {
    double t = 0.0;
    double area = 0.0;
};

// Machine-checkable record of one inadmissible configuration-velocity pair:
// at the contact given by beta, the velocity Ustar has vanishing first and
// strictly negative second Taylor coefficient, and the overlap oracle
// confirms interpenetration on both sides of t = 0 within |t| <= delta.
struct Certificate {
    int version = kCertificateVersion;
    std::string toolVersion = kToolVersion;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    Beta beta;
    ContactData contact;
    Velocity6 Ustar;
    double a1 = 0.0;
    double a2 = 0.0;
    double K = 0.0;
    double delta = 0.0;
    std::vector<OverlapSample> overlapSamples;
};

struct Verdict {
    bool valid = true;
    std::vector<std::string> details;
};

// Velocity-independent margin K at boundary parameter u:
// ((eps^2-1)^2/eps^2) [sin^2 u + eps^2/(1-eps^2)]^2 - 1.
double k_beta(double epsilon, double u);

// Same expression as a polynomial in x = sin^2 u; increasing on [0, 1] with
// its unique root at x = eps/(1+eps).
double poly_P(double epsilon, double x);

// The rotating-but-not-translating family member U* = (0, 0, vbar1, vbar2, 1, 0)
// with vbar1 = ((1-eps^2)/eps^2) p2^3 (makes psi_ddot0 = -2K) and vbar2
// solving nu.U* = 0. Throws DegenerateContact when |p2| or |n2| < 1e-6.
Velocity6 special_velocity(double epsilon, const ContactData& contact);

// Full pipeline at the canonical witness u = pi/2, theta = 0. Gated to
// epsilon < 1/2 unless research is set (the margin K stays positive at
// u = pi/2 for every epsilon in (0,1), but only the gated range carries the
// open-set guarantee). Throws EpsilonOutOfRange or VerificationFailed.
Certificate find_inadmissible(double epsilon, bool research = false);

// Same pipeline at an arbitrary contact parameter and rotation; requires
// k_beta(epsilon, u) > 0 for the construction to verify.
Certificate find_inadmissible_at(double epsilon, double u, double theta,
                                 bool research = false);

// Recomputes everything from (epsilon, beta, Ustar) and re-runs the overlap
// oracle at t = ±delta/2^k, k = 1..4. Valid only if all certificate
// invariants hold and every nonzero sample shows positive area.
Verdict verify_certificate(const Certificate& cert);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace heg
