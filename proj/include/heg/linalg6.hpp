#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace heg {

using Vec6 = std::array<double, 6>;

inline double dot6(const Vec6& a, const Vec6& b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

inline double norm6(const Vec6& a) { return std::sqrt(dot6(a, a)); }

struct Mat6 {
    std::array<double, 36> a{};

    double& operator()(int i, int j) { return a[static_cast<size_t>(6 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(6 * i + j)]; }

    static Mat6 identity() {
        Mat6 m;
        for (int i = 0; i < 6; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Vec6 operator*(const Mat6& m, const Vec6& v) {
    Vec6 r{};
    for (int i = 0; i < 6; ++i) {
        double s = 0.0;
        for (int j = 0; j < 6; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline Mat6 operator*(const Mat6& x, const Mat6& y) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double s = 0.0;
            for (int k = 0; k < 6; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

// Cyclic Jacobi eigenvalues of a symmetric n x n matrix stored row-major
// (n <= 8 is all this project needs). Returns eigenvalues in ascending order.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> m, int n) {
    auto at = [&](int i, int j) -> double& { return m[static_cast<size_t>(n * i + j)]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i);
    for (size_t i = 1; i < ev.size(); ++i)
        for (size_t j = i; j > 0 && ev[j] < ev[j - 1]; --j) std::swap(ev[j], ev[j - 1]);
    return ev;
}

}  // namespace heg
