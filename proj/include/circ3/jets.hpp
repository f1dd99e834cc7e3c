#pragma once

// Forward-mode jets.
//
// Jet2 carries a scalar's value, gradient and full symmetric Hessian at a
// point and propagates them exactly through arithmetic (no truncation
// error). Dual3 is the first-order restriction, used where only one
// derivative level is needed (e.g. differentiating Christoffel symbols).
//
// Domain preconditions (positive log/sqrt arguments, nonzero divisors) are
// the caller's responsibility; the expression evaluator checks them so it
// can point at the offending subexpression.

#include <cmath>

#include "circ3/tensor.hpp"

namespace circ3 {

struct Jet2 {
    double v = 0.0;
    Vec3 g{};
    Mat3 h{};
};

inline Jet2 jet_const(double c) { return Jet2{c, {}, {}}; }

// Coordinate function x_i at point p.
inline Jet2 jet_var(const Vec3& p, int i) {
    Jet2 r;
    r.v = p[i];
    r.g[i] = 1.0;
    return r;
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v + b.v;
    for (int i = 0; i < 3; ++i) {
        r.g[i] = a.g[i] + b.g[i];
        for (int j = 0; j < 3; ++j) r.h(i, j) = a.h(i, j) + b.h(i, j);
    }
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v - b.v;
    for (int i = 0; i < 3; ++i) {
        r.g[i] = a.g[i] - b.g[i];
        for (int j = 0; j < 3; ++j) r.h(i, j) = a.h(i, j) - b.h(i, j);
    }
    return r;
}

inline Jet2 operator-(const Jet2& a) {
    Jet2 r;
    r.v = -a.v;
    for (int i = 0; i < 3; ++i) {
        r.g[i] = -a.g[i];
        for (int j = 0; j < 3; ++j) r.h(i, j) = -a.h(i, j);
    }
    return r;
}

// Hessians are filled on the upper triangle and mirrored, so symmetry is
// exact by construction (IEEE addition order would otherwise break it in
// the last bits).
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            r.h(i, j) = a.v * b.h(i, j) + b.v * a.h(i, j) + a.g[i] * b.g[j] + a.g[j] * b.g[i];
            r.h(j, i) = r.h(i, j);
        }
    return r;
}

inline Jet2 operator*(double c, const Jet2& a) { return jet_const(c) * a; }

// Chain rule for a unary f with derivatives fp, fpp at a.v.
inline Jet2 jet_chain(const Jet2& a, double f, double fp, double fpp) {
    Jet2 r;
    r.v = f;
    for (int i = 0; i < 3; ++i) r.g[i] = fp * a.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            r.h(i, j) = fp * a.h(i, j) + fpp * (a.g[i] * a.g[j]);
            r.h(j, i) = r.h(i, j);
        }
    return r;
}

inline Jet2 jet_recip(const Jet2& a) {
    const double w = 1.0 / a.v;
    return jet_chain(a, w, -w * w, 2.0 * w * w * w);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * jet_recip(b); }

inline Jet2 jet_sin(const Jet2& a) { return jet_chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet2 jet_cos(const Jet2& a) { return jet_chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }

inline Jet2 jet_exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return jet_chain(a, e, e, e);
}

inline Jet2 jet_log(const Jet2& a) {
    return jet_chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

inline Jet2 jet_sqrt(const Jet2& a) {
    const double s = std::sqrt(a.v);
    return jet_chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline double powi(double x, int n) {
    if (n == 0) return 1.0;
    if (n < 0) return 1.0 / powi(x, -n);
    double r = 1.0, b = x;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Integer power; n < 0 requires a.v != 0 (checked by the evaluator).
inline Jet2 jet_powi(const Jet2& a, int n) {
    if (n == 0) return jet_const(1.0);
    if (n == 1) return a;
    return jet_chain(a, powi(a.v, n), n * powi(a.v, n - 1),
                     static_cast<double>(n) * (n - 1) * powi(a.v, n - 2));
}

// ---------------------------------------------------------------------------
// Dual3: value + gradient

struct Dual3 {
    double v = 0.0;
    Vec3 g{};
};

inline Dual3 dual_const(double c) { return Dual3{c, {}}; }

inline Dual3 operator+(const Dual3& a, const Dual3& b) {
    return {a.v + b.v, {a.g[0] + b.g[0], a.g[1] + b.g[1], a.g[2] + b.g[2]}};
}

inline Dual3 operator-(const Dual3& a, const Dual3& b) {
    return {a.v - b.v, {a.g[0] - b.g[0], a.g[1] - b.g[1], a.g[2] - b.g[2]}};
}

inline Dual3 operator-(const Dual3& a) { return {-a.v, {-a.g[0], -a.g[1], -a.g[2]}}; }

inline Dual3 operator*(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
    return r;
}

inline Dual3 operator*(double c, const Dual3& a) { return {c * a.v, {c * a.g[0], c * a.g[1], c * a.g[2]}}; }

inline Dual3 operator/(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v / b.v;
    const double w = 1.0 / (b.v * b.v);
    for (int i = 0; i < 3; ++i) r.g[i] = (a.g[i] * b.v - a.v * b.g[i]) * w;
    return r;
}

// First-derivative restriction of a second-order jet.
inline Dual3 dual_of(const Jet2& j) { return {j.v, j.g}; }

// The i-th partial of a jet, carrying its own gradient (the Hessian row).
inline Dual3 dual_partial(const Jet2& j, int i) {
    return {j.g[i], {j.h(i, 0), j.h(i, 1), j.h(i, 2)}};
}

}  // namespace circ3
