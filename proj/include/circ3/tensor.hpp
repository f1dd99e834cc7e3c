#pragma once

// Fixed-dimension-3 dense tensor algebra.
//
// Index conventions used across the whole library (fixed here once):
//   gamma[k][i][j]   = Gamma^k_ij, symmetric in (i,j)
//   Rank3 F          = F[k][i][j], first index is the differentiation slot,
//                      symmetric in the last two slots
//   Rank4 R          = R[i][j][k][l], fully lowered, last slot is the
//                      metric-pairing slot: R(x,y,z,u) = g(R(x,y)z, u)
//   q_index/q_matrix = the cyclic structure acts on the basis by
//                      e1 -> e2 -> e3 -> e1

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circ3 {

using Vec3 = std::array<double, 3>;

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
};

struct Rank3 {
    std::array<std::array<std::array<double, 3>, 3>, 3> t{};

    double& operator()(int k, int i, int j) { return t[k][i][j]; }
    double operator()(int k, int i, int j) const { return t[k][i][j]; }
};

struct Rank4 {
    std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> t{};

    double& operator()(int i, int j, int k, int l) { return t[i][j][k][l]; }
    double operator()(int i, int j, int k, int l) const { return t[i][j][k][l]; }
};

inline Mat3 mat3_zero() { return Mat3{}; }

inline Mat3 mat3_identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
    return r;
}

// result[i][j] = row[(j - i) mod 3]
inline Mat3 circulant(const Vec3& row) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = row[((j - i) % 3 + 3) % 3];
    return r;
}

// Basis action of the cyclic structure: index j maps to q_index(j).
inline int q_index(int j) { return (j + 1) % 3; }

// Operator matrix of the structure: (Q v)_i = sum_j Q[i][j] v_j sends
// e1 -> e2 -> e3 -> e1.
inline Mat3 q_matrix() { return circulant({0.0, 0.0, 1.0}); }

inline Mat3 phi_matrix() { return circulant({0.0, 1.0, 1.0}); }

inline Mat3 s_matrix() {
    Mat3 r = circulant({-1.0, 1.0, 1.0});
    return r;
}

inline Vec3 mat_vec(const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += a(i, j) * v[j];
    return r;
}

inline Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

inline Mat3 scale(const Mat3& a, double c) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = c * a(i, j);
    return r;
}

inline Mat3 add(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Mat3 sub(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

inline double det3(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

struct SingularMatrixError : std::runtime_error {
    double det;
    explicit SingularMatrixError(double d)
        : std::runtime_error("singular 3x3 matrix, det = " + std::to_string(d)), det(d) {}
};

// Adjugate-based inverse. Requires |det| > 1e-12.
inline Mat3 invert3(const Mat3& a) {
    const double d = det3(a);
    if (std::abs(d) <= 1e-12) throw SingularMatrixError(d);
    Mat3 r;
    r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return r;
}

// theta_k = minv^{ij} F[i][j][k]
inline Vec3 contract_trace(const Mat3& minv, const Rank3& f) {
    Vec3 r{};
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += minv(i, j) * f(i, j, k);
        r[k] = s;
    }
    return r;
}

// theta*_k = minv^{ij} F[i][q(j)][k]
inline Vec3 contract_trace_q(const Mat3& minv, const Rank3& f) {
    Vec3 r{};
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += minv(i, j) * f(i, q_index(j), k);
        r[k] = s;
    }
    return r;
}

// rho[a][b] = minv^{ij} R[i][a][b][j]
inline Mat3 contract_ricci(const Mat3& minv, const Rank4& r4) {
    Mat3 r;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += minv(i, j) * r4(i, a, b, j);
            r(a, b) = s;
        }
    return r;
}

inline double contract_scalar(const Mat3& minv, const Mat3& rho) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += minv(i, j) * rho(i, j);
    return s;
}

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double bilinear(const Mat3& g, const Vec3& x, const Vec3& y) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += g(i, j) * x[i] * y[j];
    return s;
}

inline double max_abs(const Mat3& a) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a(i, j)));
    return r;
}

inline double max_abs(const Rank3& a) {
    double r = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a(k, i, j)));
    return r;
}

inline double max_abs(const Rank4& a) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) r = std::max(r, std::abs(a(i, j, k, l)));
    return r;
}

inline double max_abs(const Vec3& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) { return max_abs(sub(a, b)); }

// Lower-triangular Cholesky factor; throws SingularMatrixError if the
// matrix is not positive definite.
inline Mat3 cholesky3(const Mat3& a) {
    Mat3 l;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) throw SingularMatrixError(s);
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

}  // namespace circ3
