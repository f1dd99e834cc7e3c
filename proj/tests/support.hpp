#pragma once

// Shared test helpers: finite-difference oracles (value-only evaluation,
// independent of the jet propagation they check), a seeded random
// expression generator, and valid random metric-field families.

#include <cmath>
#include <vector>

#include "circ3/expr.hpp"
#include "circ3/manifold.hpp"
#include "circ3/sampling.hpp"

namespace circ3::testing {

inline double eval_value(const Expr& e, const Vec3& p) { return eval_jet2(e, p).v; }

inline Vec3 fd_gradient(const Expr& e, Vec3 p, double h) {
    Vec3 g{};
    for (int i = 0; i < 3; ++i) {
        Vec3 pp = p, pm = p;
        pp[i] += h;
        pm[i] -= h;
        g[i] = (eval_value(e, pp) - eval_value(e, pm)) / (2.0 * h);
    }
    return g;
}

inline Mat3 fd_hessian(const Expr& e, Vec3 p, double h) {
    Mat3 hess;
    const double f0 = eval_value(e, p);
    for (int i = 0; i < 3; ++i) {
        Vec3 pp = p, pm = p;
        pp[i] += h;
        pm[i] -= h;
        hess(i, i) = (eval_value(e, pp) - 2.0 * f0 + eval_value(e, pm)) / (h * h);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Vec3 a = p, b = p, c = p, d = p;
            a[i] += h; a[j] += h;
            b[i] += h; b[j] -= h;
            c[i] -= h; c[j] += h;
            d[i] -= h; d[j] -= h;
            hess(i, j) = (eval_value(e, a) - eval_value(e, b) - eval_value(e, c) +
                          eval_value(e, d)) /
                         (4.0 * h * h);
            hess(j, i) = hess(i, j);
        }
    return hess;
}

// Random expression trees. log/sqrt arguments and divisors are kept away
// from their singularities by construction (1.5 + u^2 shapes).
inline Expr random_expr(SampleRng& rng, int depth) {
    if (depth <= 0) {
        if (rng.integer(0, 2) == 0) return expr_num(rng.uniform(0.5, 2.5));
        return expr_var(rng.integer(0, 2));
    }
    switch (rng.integer(0, 9)) {
        case 0: return expr_add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return expr_sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return expr_mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3:
            return expr_div(random_expr(rng, depth - 1),
                            expr_add(expr_num(1.5), expr_pow(random_expr(rng, depth - 1), 2)));
        case 4: return expr_pow(random_expr(rng, depth - 1), rng.integer(2, 3));
        case 5: return expr_neg(random_expr(rng, depth - 1));
        case 6: return expr_call(Op::Sin, random_expr(rng, depth - 1));
        case 7: return expr_call(Op::Cos, random_expr(rng, depth - 1));
        case 8:
            return expr_call(Op::Log, expr_add(expr_num(1.5),
                                               expr_pow(random_expr(rng, depth - 1), 2)));
        default:
            return expr_call(Op::Sqrt, expr_add(expr_num(1.5),
                                                expr_pow(random_expr(rng, depth - 1), 2)));
    }
}

inline bool jet_moderate(const Jet2& j, double cap) {
    if (!std::isfinite(j.v) || std::abs(j.v) > cap) return false;
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(j.g[i]) || std::abs(j.g[i]) > cap) return false;
        for (int k = 0; k < 3; ++k)
            if (!std::isfinite(j.h(i, k)) || std::abs(j.h(i, k)) > cap) return false;
    }
    return true;
}

// Fourth-derivative proxy: second difference of the Hessian along each
// axis. Central-difference truncation error scales with it, so the random
// suite filters on it to keep the h = 1e-4 windows honest.
inline double fourth_derivative_proxy(const Expr& e, const Vec3& p, double delta) {
    const Jet2 j0 = eval_jet2(e, p);
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) {
        Vec3 pp = p, pm = p;
        pp[a] += delta;
        pm[a] -= delta;
        const Jet2 jp = eval_jet2(e, pp);
        const Jet2 jm = eval_jet2(e, pm);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(jp.h(i, k) + jm.h(i, k) - 2.0 * j0.h(i, k)) /
                                            (delta * delta));
    }
    return worst;
}

// Draws (expr, point) pairs until the jet is finite and moderate and the
// expression is smooth enough for the finite-difference windows.
inline std::pair<Expr, Vec3> random_expr_case(SampleRng& rng) {
    for (;;) {
        const Expr e = random_expr(rng, rng.integer(2, 4));
        const Vec3 p = {rng.uniform(0.2, 1.8), rng.uniform(0.2, 1.8), rng.uniform(0.2, 1.8)};
        try {
            if (jet_moderate(eval_jet2(e, p), 50.0) &&
                fourth_derivative_proxy(e, p, 0.05) <= 2000.0)
                return {e, p};
        } catch (const EvalError&) {
        }
    }
}

// Valid metric fields on the [0.1, 2] box: A stays above 2.3, B inside
// (0.6, 1.4), so A > B > 0 and D is bounded away from zero.
inline MetricField random_field(SampleRng& rng) {
    const int ia = rng.integer(0, 2), ja = rng.integer(0, 2), jb = rng.integer(0, 2);
    Expr A = expr_add(expr_num(rng.uniform(2.5, 3.5)),
                      expr_add(expr_mul(expr_num(rng.uniform(0.05, 0.2)),
                                        expr_pow(expr_var(ia), 2)),
                               expr_mul(expr_num(rng.uniform(0.05, 0.2)),
                                        expr_call(Op::Sin, expr_var(ja)))));
    Expr B = expr_add(expr_num(rng.uniform(0.8, 1.2)),
                      expr_mul(expr_num(rng.uniform(0.05, 0.2)),
                               expr_call(Op::Cos, expr_var(jb))));
    return {A, B};
}

inline MetricField field_of(const std::string& a, const std::string& b) {
    return {parse(a), parse(b)};
}

}  // namespace circ3::testing
