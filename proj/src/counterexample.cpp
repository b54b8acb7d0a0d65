#include "heg/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "heg/errors.hpp"
#include "heg/germs.hpp"
#include "heg/oracle.hpp"
#include "heg/tolerances.hpp"

namespace heg {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr int kCertificateResolution = 512;
constexpr double kDeltaCap = 0.1;

double require_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must satisfy 0 < eps < 1");
    return epsilon;
}

double overlap_area_on_path(const Shape& s, const Beta& beta, double d, const Velocity6& U,
                            double t) {
    auto [pa, pb] = poses_at(beta, d, U, t);
    return overlap_area(s, pa, pb, kCertificateResolution);
}

// The eight dyadic verification samples t = ±delta/2^k, k = 1..4, ascending.
std::vector<double> dyadic_times(double delta) {
    std::vector<double> ts;
    for (int k = 1; k <= 4; ++k) ts.push_back(-delta / (1 << k));
    for (int k = 4; k >= 1; --k) ts.push_back(delta / (1 << k));
    return ts;
}

bool collect_samples(const Shape& s, const Beta& beta, double d, const Velocity6& U,
                     double delta, std::vector<OverlapSample>& out) {
    out.clear();
    for (double t : dyadic_times(delta)) {
        double area = overlap_area_on_path(s, beta, d, U, t);
        if (area <= tol::overlap) return false;
        out.push_back({t, area});
    }
    return true;
}

}  // namespace

double k_beta(double epsilon, double u) {
    double su = std::sin(u);
    return poly_P(epsilon, su * su);
}

double poly_P(double epsilon, double x) {
    require_epsilon(epsilon);
    double e2 = epsilon * epsilon;
    double bracket = x + e2 / (1.0 - e2);
    return (e2 - 1.0) * (e2 - 1.0) / e2 * bracket * bracket - 1.0;
}

Velocity6 special_velocity(double epsilon, const ContactData& contact) {
    require_epsilon(epsilon);
    double p2 = contact.p.y, n2 = contact.n.y;
    if (std::fabs(p2) < 1e-6 || std::fabs(n2) < 1e-6)
        throw DegenerateContact("special velocity needs |p2| and |n2| bounded away from 0");
    double e2 = epsilon * epsilon;
    Velocity6 U;
    U.omega = 1.0;
    U.omegabar = 0.0;
    U.vbar.x = (1.0 - e2) / e2 * p2 * p2 * p2;
    // nu.U = n.vbar - (p ∧ n) = 0
    U.vbar.y = (cross(contact.p, contact.n) - contact.n.x * U.vbar.x) / n2;
    return U;
}

Certificate find_inadmissible(double epsilon, bool research) {
    return find_inadmissible_at(epsilon, kPi / 2.0, 0.0, research);
}

Certificate find_inadmissible_at(double epsilon, double u, double theta, bool research) {
    require_epsilon(epsilon);
    if (!research && !(epsilon < 0.5))
        throw EpsilonOutOfRange(
            "epsilon outside the guaranteed range [open-set construction needs eps < 1/2; "
            "research mode lifts the gate]");

    Shape s = Shape::ellipse(epsilon);
    Certificate cert;
    cert.epsilon = epsilon;
    auto [beta, contact] = config_from_contact(s, u, theta);
    cert.beta = beta;
    cert.contact = contact;
    cert.Ustar = special_velocity(epsilon, contact);
    cert.a1 = psi_dot0(s, contact, cert.Ustar);
    cert.a2 = psi_ddot0(s, contact, cert.Ustar);
    cert.K = k_beta(epsilon, contact.u);

    // Half-width selection. The overlap areas shrink like |t|^3, so the
    // binding constraint is the smallest dyadic sample clearing tol::overlap;
    // the passing half-widths form an interval. Walk a doubling ladder from
    // the velocity-scaled start up to the cap and keep the largest passing
    // value, falling back to halving only if the whole ladder fails.
    double delta = 0.1 * std::min(1.0, 1.0 / cert.Ustar.norm());
    std::vector<OverlapSample> samples, tentative;
    bool ok = false;
    for (double cand = delta; cand <= kDeltaCap * (1.0 + 1e-12); cand *= 2.0) {
        if (collect_samples(s, beta, contact.d, cert.Ustar, cand, tentative)) {
            delta = cand;
            samples = tentative;
            ok = true;
        }
    }
    for (int halvings = 0; !ok && halvings < 40; ++halvings) {
        delta *= 0.5;
        ok = collect_samples(s, beta, contact.d, cert.Ustar, delta, samples);
    }
    if (!ok)
        throw VerificationFailed("overlap oracle does not confirm two-sided penetration");
    cert.delta = delta;
    cert.overlapSamples = samples;

    Verdict verdict = verify_certificate(cert);
    if (!verdict.valid) {
        std::string detail = "certificate verification failed:";
        for (const std::string& line : verdict.details) detail += " " + line;
        throw VerificationFailed(detail);
    }
    return cert;
}

Verdict verify_certificate(const Certificate& cert) {
    Verdict v;
    auto fail = [&v](const std::string& msg) {
        v.valid = false;
        v.details.push_back(msg);
    };

    if (!(cert.epsilon > 0.0) || !(cert.epsilon < 1.0)) {
        fail("epsilon outside (0,1)");
        return v;
    }
    Shape s = Shape::ellipse(cert.epsilon);

    ContactData contact;
    try {
        contact = contact_data(s, cert.beta);
    } catch (const ContactDegenerate& e) {
        fail(std::string("contact recomputation failed: ") + e.what());
        return v;
    }
    if (std::fabs(contact.d - cert.contact.d) > 1e-8 ||
        norm(contact.p - cert.contact.p) > 1e-6 || norm(contact.n - cert.contact.n) > 1e-6)
        fail("stored contact data disagrees with recomputation");

    double unorm = cert.Ustar.norm();
    double a1 = psi_dot0(s, contact, cert.Ustar);
    double a2 = psi_ddot0(s, contact, cert.Ustar);
    double K = k_beta(cert.epsilon, contact.u);
    if (!(std::fabs(a1) <= 1e-9 * (1.0 + unorm))) fail("a1 not negligible");
    if (!(std::fabs(a1 - cert.a1) <= 1e-9 * (1.0 + unorm))) fail("stored a1 mismatch");
    if (!(std::fabs(a2 - cert.a2) <= 1e-6)) fail("stored a2 mismatch");
    if (!(K > 0.0)) fail("margin K not positive");
    if (!(std::fabs(K - cert.K) <= 1e-8)) fail("stored K mismatch");
    if (!(cert.a2 <= -2.0 * cert.K + 1e-6)) fail("a2 above -2K");
    double nuU = dot6(nu_vector(contact), cert.Ustar.to_array());
    if (!(std::fabs(nuU) <= 1e-10)) fail("Ustar not on the grazing hyperplane");
    if (!(cert.delta > 0.0)) {
        fail("delta not positive");
        return v;
    }

    ScanResult scan = time_scan_at(s, cert.beta, contact.d, cert.Ustar, cert.delta, 16, 0);
    if (scan.cleanNegative) fail("no overlap detected for t < 0");
    if (scan.cleanPositive) fail("no overlap detected for t > 0");

    bool sawNeg = false, sawPos = false;
    for (const OverlapSample& sample : cert.overlapSamples) {
        if (sample.t < 0.0) sawNeg = true;
        if (sample.t > 0.0) sawPos = true;
        if (sample.t != 0.0 && !(sample.area > 0.0)) fail("stored sample without overlap");
    }
    if (!sawNeg || !sawPos) fail("stored samples do not cover both signs of t");

    for (double t : dyadic_times(cert.delta)) {
        double area = overlap_area_on_path(s, cert.beta, contact.d, cert.Ustar, t);
        if (!(area > tol::overlap)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "no overlap at t=%.3e", t);
            fail(buf);
            continue;
        }
        for (const OverlapSample& sample : cert.overlapSamples)
            if (std::fabs(sample.t - t) <= 1e-12 * cert.delta &&
                std::fabs(sample.area - area) > 0.05 * area + 1e-9)
                fail("stored sample area disagrees with recomputation");
    }
    return v;
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["version"] = cert.version;
    j["toolVersion"] = cert.toolVersion;
    j["seed"] = cert.seed;
    j["epsilon"] = cert.epsilon;
    j["beta"] = {{"theta", cert.beta.theta}, {"psi", cert.beta.psi}};
    j["contact"] = {{"d", cert.contact.d},
                    {"p", {cert.contact.p.x, cert.contact.p.y}},
                    {"q", {cert.contact.q.x, cert.contact.q.y}},
                    {"n", {cert.contact.n.x, cert.contact.n.y}},
                    {"u", cert.contact.u}};
    j["Ustar"] = cert.Ustar.to_array();
    j["a1"] = cert.a1;
    j["a2"] = cert.a2;
    j["K"] = cert.K;
    j["delta"] = cert.delta;
    nlohmann::json samples = nlohmann::json::array();
    for (const OverlapSample& s : cert.overlapSamples)
        samples.push_back({{"t", s.t}, {"area", s.area}});
    j["overlapSamples"] = samples;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert;
    cert.version = j.at("version").get<int>();
    cert.toolVersion = j.at("toolVersion").get<std::string>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.epsilon = j.at("epsilon").get<double>();
    cert.beta.theta = j.at("beta").at("theta").get<double>();
    cert.beta.psi = j.at("beta").at("psi").get<double>();
    const auto& c = j.at("contact");
    cert.contact.d = c.at("d").get<double>();
    cert.contact.p = {c.at("p").at(0).get<double>(), c.at("p").at(1).get<double>()};
    cert.contact.q = {c.at("q").at(0).get<double>(), c.at("q").at(1).get<double>()};
    cert.contact.n = {c.at("n").at(0).get<double>(), c.at("n").at(1).get<double>()};
    cert.contact.u = c.at("u").get<double>();
    Vec6 u{};
    for (int i = 0; i < 6; ++i) u[static_cast<size_t>(i)] = j.at("Ustar").at(i).get<double>();
    cert.Ustar = Velocity6::from_array(u);
    cert.a1 = j.at("a1").get<double>();
    cert.a2 = j.at("a2").get<double>();
    cert.K = j.at("K").get<double>();
    cert.delta = j.at("delta").get<double>();
    for (const auto& s : j.at("overlapSamples"))
        cert.overlapSamples.push_back({s.at("t").get<double>(), s.at("area").get<double>()});
    return cert;
}

}  // namespace heg
