// heg: collision-analysis CLI for congruent hard disks and hard ellipses.
//
// Subcommands:
//   geometry  contact data (d, p, q, n, u) for one configuration
//   classify  germ label + Taylor evidence for one (configuration, velocity)
//   search    construct and verify an inadmissible-velocity certificate
//   verify    re-verify a certificate file
//   scan      configuration-space grid report (CSV or JSON)
//
// Exit codes: 0 success, 2 input/geometry error, 3 range gate, 4 verification
// failure. HEG_THREADS caps scan parallelism; outputs are byte-identical for
// identical configurations regardless of thread count.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heg/counterexample.hpp"
#include "heg/disk.hpp"
#include "heg/errors.hpp"
#include "heg/germs.hpp"
#include "heg/oracle.hpp"
#include "heg/tolerances.hpp"

namespace {

using namespace heg;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Shape make_shape(bool disk, double eps, bool epsSet) {
    if (disk) return Shape::disk();
    if (!epsSet) throw std::invalid_argument("pass either --eps <value> or --disk");
    return Shape::ellipse(eps);
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    long n = hw ? static_cast<long>(hw) : 1;
    if (const char* env = std::getenv("HEG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min(n, v);
    }
    return static_cast<int>(std::max(1L, std::min(n, 64L)));
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Velocity6 random_velocity(std::mt19937_64& rng, double scale) {
    auto r = [&] { return scale * (2.0 * unit_double(rng) - 1.0); };
    Velocity6 U;
    U.v = {r(), r()};
    U.vbar = {r(), r()};
    U.omega = r();
    U.omegabar = r();
    return U;
}

// Smallest eigenvalue of the quadratic form a2form restricted to the
// hyperplane nu.U = 0: polarize to a 6x6 symmetric matrix, change to a
// Householder basis whose last five columns span the hyperplane, and solve
// the 5x5 symmetric eigenproblem.
double restricted_min_eig(const std::function<double(const Velocity6&)>& a2form, Vec6 nu) {
    double nn = norm6(nu);
    for (double& c : nu) c /= nn;

    Mat6 A;
    std::array<double, 6> diag{};
    for (int k = 0; k < 6; ++k) {
        Vec6 e{};
        e[static_cast<size_t>(k)] = 1.0;
        diag[static_cast<size_t>(k)] = a2form(Velocity6::from_array(e));
        A(k, k) = diag[static_cast<size_t>(k)];
    }
    for (int k = 0; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) {
            Vec6 e{};
            e[static_cast<size_t>(k)] = 1.0;
            e[static_cast<size_t>(l)] = 1.0;
            double q =
                a2form(Velocity6::from_array(e)) - diag[static_cast<size_t>(k)] - diag[static_cast<size_t>(l)];
            A(k, l) = A(l, k) = 0.5 * q;
        }

    // Householder vector sending e1 to -sign(nu1) nu; the remaining columns
    // of H = I - 2 w w^T / (w.w) are an orthonormal basis of nu-perp.
    Vec6 w = nu;
    double sign = w[0] >= 0.0 ? 1.0 : -1.0;
    w[0] += sign;
    double wn = dot6(w, w);
    Mat6 H = Mat6::identity();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) H(i, j) -= 2.0 * w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)] / wn;

    std::vector<double> R(25, 0.0);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            double s = 0.0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) s += H(i, a + 1) * A(i, j) * H(j, b + 1);
            R[static_cast<size_t>(5 * a + b)] = s;
        }
    return jacobi_eigenvalues(R, 5).front();
}

void print_contact(const ContactData& c) {
    std::cout << "d = " << fmt17(c.d) << "\n";
    std::cout << "p = (" << fmt17(c.p.x) << ", " << fmt17(c.p.y) << ")\n";
    std::cout << "q = (" << fmt17(c.q.x) << ", " << fmt17(c.q.y) << ")\n";
    std::cout << "n = (" << fmt17(c.n.x) << ", " << fmt17(c.n.y) << ")\n";
    std::cout << "u = " << fmt17(c.u) << "\n";
}

void print_germ(const GermClass& g) {
    std::cout << to_string(g.label) << " (a1=" << fmt17(g.evidence.a1)
              << ", a2=" << fmt17(g.evidence.a2) << ", nu.U=" << fmt17(g.evidence.nuDotU)
              << ")\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

struct ScanConfig {
    Shape shape;
    int nTheta = 16;
    int nPsi = 16;
    double horizon = 0.01;
    int samples = 32;
    std::uint64_t seed = 0;
    std::string outputPath;
    std::string format = "csv";
};

struct ScanRow {
    double theta = 0.0, psi = 0.0, u = 0.0, d = 0.0, K = 0.0, minEig = 0.0;
    int counts[5] = {0, 0, 0, 0, 0};  // Pre, Post, Grazing, Inadmissible, Undetermined
};

ScanRow scan_cell(const ScanConfig& cfg, int i, int j) {
    constexpr double kTau = 6.283185307179586476925286766559;
    ScanRow row;
    row.theta = kTau * i / cfg.nTheta;
    row.psi = kTau * j / cfg.nPsi;
    Beta beta{row.theta, row.psi};
    ContactData contact = contact_data(cfg.shape, beta);
    row.u = contact.u;
    row.d = contact.d;

    std::function<double(const Velocity6&)> a2form;
    Vec6 nu{};
    if (cfg.shape.kind == ShapeKind::Ellipse) {
        row.K = k_beta(cfg.shape.epsilon, contact.u);
        a2form = [&](const Velocity6& U) { return psi_ddot0(cfg.shape, contact, U); };
        nu = nu_vector(contact);
    } else {
        row.K = std::numeric_limits<double>::quiet_NaN();
        DiskQuadratic dq = disk_quadratic(beta);
        a2form = [&](const Velocity6& U) {
            Vec6 a = U.to_array();
            return 2.0 * dot6(a, dq.A * a);
        };
        nu = dq.gamma;
    }
    row.minEig = restricted_min_eig(a2form, nu);

    // Velocities sampled on the grazing hyperplane nu.U = 0, where the
    // inadmissible class lives; labels by the closed-form classifier.
    double nn = norm6(nu);
    Vec6 nuHat = nu;
    for (double& c : nuHat) c /= nn;
    std::uint64_t cell = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(cfg.nPsi) +
                         static_cast<std::uint64_t>(j);
    std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (cell + 1)));
    for (int k = 0; k < cfg.samples; ++k) {
        Vec6 a = random_velocity(rng, 2.0).to_array();
        double proj = dot6(nuHat, a);
        for (int c = 0; c < 6; ++c) a[static_cast<size_t>(c)] -= proj * nuHat[static_cast<size_t>(c)];
        Velocity6 U = Velocity6::from_array(a);
        GermLabel label = cfg.shape.kind == ShapeKind::Ellipse
                              ? classify_local(cfg.shape, contact, U).label
                              : classify_disk(beta, U).label;
        row.counts[static_cast<int>(label)]++;
    }
    return row;
}

int cmd_scan(const ScanConfig& cfg) {
    int total = cfg.nTheta * cfg.nPsi;
    std::vector<ScanRow> rows(static_cast<size_t>(total));
    int workers = std::min(thread_budget(), total);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int cell = w; cell < total; cell += workers)
                    rows[static_cast<size_t>(cell)] =
                        scan_cell(cfg, cell / cfg.nPsi, cell % cfg.nPsi);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    static const char* kColumns =
        "theta,psi,u,d,K,minEigRestricted,nPre,nPost,nGrazing,nInadmissible,nUndetermined";
    std::string shapeDesc = cfg.shape.kind == ShapeKind::Disk
                                ? std::string("shape=disk")
                                : "shape=ellipse epsilon=" + fmt17(cfg.shape.epsilon);

    std::ostringstream out;
    if (cfg.format == "csv") {
        out << "# heg scan " << kToolVersion << "\n";
        out << "# " << shapeDesc << "\n";
        out << "# nTheta=" << cfg.nTheta << " nPsi=" << cfg.nPsi << " horizon="
            << fmt17(cfg.horizon) << " samples=" << cfg.samples << " seed=" << cfg.seed << "\n";
        out << "# K: velocity-independent margin (nan for disk); minEigRestricted: smallest\n";
        out << "# eigenvalue of the second-order form on the hyperplane nu.U=0; counts are\n";
        out << "# germ labels of " << cfg.samples << " seeded random velocities on that hyperplane.\n";
        out << kColumns << "\n";
        for (const ScanRow& r : rows) {
            out << fmt17(r.theta) << ',' << fmt17(r.psi) << ',' << fmt17(r.u) << ','
                << fmt17(r.d) << ',' << fmt17(r.K) << ',' << fmt17(r.minEig);
            for (int c : r.counts) out << ',' << c;
            out << '\n';
        }
    } else {
        nlohmann::json j;
        j["tool"] = "heg scan";
        j["toolVersion"] = kToolVersion;
        j["shape"] = cfg.shape.kind == ShapeKind::Disk ? "disk" : "ellipse";
        if (cfg.shape.kind == ShapeKind::Ellipse) j["epsilon"] = cfg.shape.epsilon;
        j["nTheta"] = cfg.nTheta;
        j["nPsi"] = cfg.nPsi;
        j["horizon"] = cfg.horizon;
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
        j["columns"] = kColumns;
        nlohmann::json arr = nlohmann::json::array();
        for (const ScanRow& r : rows) {
            nlohmann::json jr = {r.theta, r.psi, r.u, r.d, r.K, r.minEig};
            for (int c : r.counts) jr.push_back(c);
            arr.push_back(jr);
        }
        j["rows"] = arr;
        out << j.dump(2) << "\n";
    }
    write_file(cfg.outputPath, out.str());
    std::cout << "wrote " << cfg.outputPath << " (" << total << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collision analysis for congruent hard disks and hard ellipses"};
    app.require_subcommand(1);

    double eps = 0.0, theta = 0.0, psi = 0.0;
    bool disk = false;

    auto add_shape = [&](CLI::App* sub) {
        CLI::Option* e = sub->add_option("--eps", eps, "ellipse parameter, 0 < eps < 1");
        sub->add_flag("--disk", disk, "congruent disks of radius 1/2")->excludes(e);
        return e;
    };

    CLI::App* geo = app.add_subcommand("geometry", "contact data for one configuration");
    CLI::Option* geoEps = add_shape(geo);
    geo->add_option("--theta", theta, "rotation of body 2");
    geo->add_option("--psi", psi, "direction of the center line");

    std::vector<double> uvec;
    bool certified = false;
    double horizon = 0.01;
    int samples = 64;
    CLI::App* cls = app.add_subcommand("classify", "germ label for one velocity");
    CLI::Option* clsEps = add_shape(cls);
    cls->add_option("--theta", theta, "rotation of body 2");
    cls->add_option("--psi", psi, "direction of the center line");
    cls->add_option("--U", uvec, "six velocity components v1 v2 vbar1 vbar2 omega omegabar")
        ->expected(6)
        ->delimiter(',')
        ->required();
    cls->add_flag("--certified", certified, "cross-check against the overlap oracle");
    cls->add_option("--horizon", horizon, "oracle scan horizon (with --certified)");
    cls->add_option("--samples", samples, "oracle scan samples per side (with --certified)");

    std::string outPath;
    bool research = false;
    CLI::App* sea = app.add_subcommand("search", "construct an inadmissible-velocity certificate");
    sea->add_option("--eps", eps, "ellipse parameter, 0 < eps < 1")->required();
    sea->add_option("--out", outPath, "certificate path (default ./out/certificate.json)");
    sea->add_flag("--research", research, "lift the eps < 1/2 gate (no openness guarantee)");

    std::string certPath;
    CLI::App* ver = app.add_subcommand("verify", "re-verify a certificate file");
    ver->add_option("file", certPath, "certificate JSON path")->required();

    ScanConfig cfg{Shape::disk(), 16, 16, 0.01, 32, 0, "", "csv"};
    CLI::App* scn = app.add_subcommand("scan", "configuration-space grid report");
    CLI::Option* scnEps = add_shape(scn);
    scn->add_option("--n-theta", cfg.nTheta, "grid points in theta")->check(CLI::PositiveNumber);
    scn->add_option("--n-psi", cfg.nPsi, "grid points in psi")->check(CLI::PositiveNumber);
    scn->add_option("--horizon", cfg.horizon, "scan horizon recorded in the header")
        ->check(CLI::PositiveNumber);
    scn->add_option("--samples", cfg.samples, "velocity samples per grid cell")
        ->check(CLI::PositiveNumber);
    scn->add_option("--seed", cfg.seed, "RNG seed for the velocity samples");
    scn->add_option("--out", cfg.outputPath, "output path (default ./out/scan.<format>)");
    scn->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*geo) {
            Shape s = make_shape(disk, eps, geoEps->count() > 0);
            print_contact(contact_data(s, Beta{theta, psi}));
        } else if (*cls) {
            Shape s = make_shape(disk, eps, clsEps->count() > 0);
            Beta beta{theta, psi};
            Velocity6 U = Velocity6::from_array({uvec[0], uvec[1], uvec[2], uvec[3], uvec[4], uvec[5]});
            GermClass g;
            if (certified)
                g = classify_certified(s, beta, U, horizon, samples);
            else if (s.kind == ShapeKind::Disk)
                g = classify_disk(beta, U);
            else
                g = classify_local(s, contact_data(s, beta), U);
            print_germ(g);
        } else if (*sea) {
            Certificate cert = find_inadmissible(eps, research);
            if (outPath.empty()) outPath = "./out/certificate.json";
            write_file(outPath, certificate_to_json(cert));
            std::cout << "Valid certificate written to " << outPath << "\n";
        } else if (*ver) {
            std::ifstream in(certPath, std::ios::binary);
            if (!in) throw std::runtime_error("cannot read certificate: " + certPath);
            std::stringstream buf;
            buf << in.rdbuf();
            Verdict v = verify_certificate(certificate_from_json(buf.str()));
            if (v.valid) {
                std::cout << "Valid\n";
            } else {
                std::cout << "Invalid\n";
                for (const std::string& d : v.details) std::cout << "  " << d << "\n";
                return 4;
            }
        } else if (*scn) {
            cfg.shape = make_shape(disk, eps, scnEps->count() > 0);
            if (cfg.outputPath.empty()) cfg.outputPath = "./out/scan." + cfg.format;
            return cmd_scan(cfg);
        }
    } catch (const EpsilonOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ClassificationConflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
