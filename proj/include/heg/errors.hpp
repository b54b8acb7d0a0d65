#pragma once

#include <stdexcept>
#include <string>

namespace heg {

// Tangency residual exceeded tol::geom after refinement; the closest-approach
// distance did not converge to a clean contact.
struct ContactDegenerate : std::runtime_error {
    explicit ContactDegenerate(const std::string& msg) : std::runtime_error(msg) {}
};

// Contact unusable for the special-velocity construction (p2 or n2 ~ 0).
struct DegenerateContact : std::runtime_error {
    explicit DegenerateContact(const std::string& msg) : std::runtime_error(msg) {}
};

// Local Taylor classification and the oracle-backed classification disagree
// outside the tolerance band; indicates a geometry or Taylor defect.
struct ClassificationConflict : std::runtime_error {
    explicit ClassificationConflict(const std::string& msg) : std::runtime_error(msg) {}
};

// The overlap oracle failed to confirm a certificate that should hold.
struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& msg) : std::runtime_error(msg) {}
};

// Epsilon outside the guaranteed construction range (and research mode off).
struct EpsilonOutOfRange : std::domain_error {
    explicit EpsilonOutOfRange(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace heg
