#include "circ3/manifold.hpp"

#include <cstdio>

namespace circ3 {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Metric entries and their first derivatives from the field jets.
double g_entry(const Jet2& A, const Jet2& B, int i, int j) { return i == j ? A.v : B.v; }
double dg_entry(const Jet2& A, const Jet2& B, int k, int i, int j) {
    return i == j ? A.g[k] : B.g[k];
}
double gt_entry(const Jet2& A, const Jet2& B, int i, int j) {
    return i == j ? 2.0 * B.v : A.v + B.v;
}
double dgt_entry(const Jet2& A, const Jet2& B, int k, int i, int j) {
    return i == j ? 2.0 * B.g[k] : A.g[k] + B.g[k];
}

Rank3 gamma_generic(const Jet2& A, const Jet2& B, const Mat3& ginv) {
    Rank3 r;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                double s = 0.0;
                for (int t = 0; t < 3; ++t)
                    s += ginv(k, t) * (dg_entry(A, B, i, t, j) + dg_entry(A, B, j, t, i) -
                                       dg_entry(A, B, t, i, j));
                r(k, i, j) = 0.5 * s;
                r(k, j, i) = r(k, i, j);
            }
    return r;
}

Rank3 fundamental_from(const Jet2& A, const Jet2& B, const Rank3& gamma) {
    Rank3 f;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = dgt_entry(A, B, k, i, j);
                for (int t = 0; t < 3; ++t)
                    s -= gamma(t, k, i) * gt_entry(A, B, t, j) +
                         gamma(t, k, j) * gt_entry(A, B, t, i);
                f(k, i, j) = s;
            }
    return f;
}

double max_abs_diff(const Rank3& a, const Rank3& b) {
    double r = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a(k, i, j) - b(k, i, j)));
    return r;
}

}  // namespace

Mat3 ginv_closed(double A, double B) {
    const double D = (A - B) * (A + 2.0 * B);
    return scale(circulant({A + B, -B, -B}), 1.0 / D);
}

Mat3 gtinv_closed(double A, double B) {
    const double D = (A - B) * (A + 2.0 * B);
    return scale(circulant({-A - 3.0 * B, A + B, A + B}), 0.5 / D);
}

Rank3 gamma_closed_form(const Jet2& A, const Jet2& B) {
    const double D = (A.v - B.v) * (A.v + 2.0 * B.v);
    const double w = 0.5 / D;
    const Vec3& Ai = A.g;
    const Vec3& Bi = B.g;
    Rank3 r;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double v;
                if (i != j && j != k && i != k) {
                    v = w * ((A.v + B.v) * (-Bi[k] + Bi[i] + Bi[j]) - B.v * (Ai[i] + Ai[j]));
                } else if (i == j && j == k) {
                    int a = (i + 1) % 3, b = (i + 2) % 3;
                    v = w * ((A.v + B.v) * Ai[i] - B.v * (4.0 * Bi[i] - Ai[a] - Ai[b]));
                } else if (i == j) {  // k != i
                    int jj = 3 - i - k;
                    v = w * ((A.v + B.v) * (2.0 * Bi[i] - Ai[k]) -
                             B.v * (2.0 * Bi[i] - Ai[jj] + Ai[i]));
                } else if (k == i) {  // i != j
                    int kk = 3 - i - j;
                    v = w * ((A.v + B.v) * Ai[j] - B.v * (-Bi[kk] + Bi[i] + Bi[j] + Ai[i]));
                } else {  // k == j, i != j: symmetric to the previous case
                    int kk = 3 - i - j;
                    v = w * ((A.v + B.v) * Ai[i] - B.v * (-Bi[kk] + Bi[j] + Bi[i] + Ai[j]));
                }
                r(k, i, j) = v;
            }
    return r;
}

Rank3 f_component_table(const Jet2& A, const Jet2& B) {
    const double A1 = A.g[0], A2 = A.g[1], A3 = A.g[2];
    const double B1 = B.g[0], B2 = B.g[1], B3 = B.g[2];
    Rank3 f;
    auto set = [&f](int k, int i, int j, double v) {
        f(k - 1, i - 1, j - 1) = v;
        f(k - 1, j - 1, i - 1) = v;
    };
    set(1, 1, 1, -2.0 * B1 + A2 + A3);
    set(2, 1, 1, -B1 + B2 + B3 - A1);
    set(3, 1, 1, -B1 + B2 + B3 - A1);
    set(1, 1, 2, 0.5 * (A3 - B1 - B2 + B3));
    set(2, 2, 1, 0.5 * (A3 - B1 - B2 + B3));
    set(3, 1, 2, B3 - 0.5 * (A1 + A2));
    set(2, 2, 2, -2.0 * B2 + A1 + A3);
    set(3, 2, 2, B1 - B2 + B3 - A2);
    set(1, 2, 2, B1 - B2 + B3 - A2);
    set(1, 1, 3, 0.5 * (A2 - B1 + B2 - B3));
    set(3, 3, 1, 0.5 * (A2 - B1 + B2 - B3));
    set(2, 1, 3, B2 - 0.5 * (A1 + A3));
    set(1, 2, 3, B1 - 0.5 * (A2 + A3));
    set(2, 2, 3, 0.5 * (A1 + B1 - B2 - B3));
    set(3, 3, 2, 0.5 * (A1 + B1 - B2 - B3));
    set(1, 3, 3, B1 + B2 - B3 - A3);
    set(2, 3, 3, B1 + B2 - B3 - A3);
    set(3, 3, 3, -2.0 * B3 + A1 + A2);
    return f;
}

Vec3 theta_closed_form(const Jet2& A, const Jet2& B) {
    const double D = (A.v - B.v) * (A.v + 2.0 * B.v);
    const double w = 1.5 / D;
    const double a = A.v, b = B.v;
    const double A1 = A.g[0], A2 = A.g[1], A3 = A.g[2];
    const double B1 = B.g[0], B2 = B.g[1], B3 = B.g[2];
    return {w * ((a + b) * (A2 + A3) + 2.0 * b * (A1 - B2 - B3) - 2.0 * a * B1),
            w * ((a + b) * (A1 + A3) + 2.0 * b * (A2 - B1 - B3) - 2.0 * a * B2),
            w * ((a + b) * (A1 + A2) + 2.0 * b * (A3 - B1 - B2) - 2.0 * a * B3)};
}

Vec3 theta_star_closed_form(const Jet2& A, const Jet2& B) {
    const double D = (A.v - B.v) * (A.v + 2.0 * B.v);
    const double w = -1.5 / D;
    const double a = A.v, b = B.v;
    const double A1 = A.g[0], A2 = A.g[1], A3 = A.g[2];
    const double B1 = B.g[0], B2 = B.g[1], B3 = B.g[2];
    return {w * ((a - 2.0 * b) * B1 - a * (B2 + B3 - A1) + b * (A2 + A3)),
            w * ((a - 2.0 * b) * B2 - a * (B1 + B3 - A2) + b * (A1 + A3)),
            w * ((a - 2.0 * b) * B3 - a * (B1 + B2 - A3) + b * (A1 + A2))};
}

PointFrame frame_at(const MetricField& field, const Vec3& p) {
    PointFrame fr;
    fr.p = p;
    fr.A = eval_jet2(field.A, p);
    fr.B = eval_jet2(field.B, p);
    const double a = fr.A.v, b = fr.B.v;
    fr.D = (a - b) * (a + 2.0 * b);
    if (!(a > b) || !(b > 0.0) || !(std::abs(fr.D) > kMinD)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "metric guard violated at (%.6g, %.6g, %.6g): A=%.6g, B=%.6g, D=%.6g "
                      "(need A > B > 0 and |D| > %.0e)",
                      p[0], p[1], p[2], a, b, fr.D, kMinD);
        throw GuardError(p, a, b, fr.D, buf);
    }

    fr.g = circulant({a, b, b});
    fr.g_tilde = circulant({2.0 * b, a + b, a + b});
    fr.g_inv = ginv_closed(a, b);
    fr.g_tilde_inv = gtinv_closed(a, b);
    fr.checks.ginv_agreement = max_abs_diff(fr.g_inv, invert3(fr.g));
    fr.checks.gtinv_agreement = max_abs_diff(fr.g_tilde_inv, invert3(fr.g_tilde));

    fr.gamma = gamma_generic(fr.A, fr.B, fr.g_inv);
    fr.gamma_closed = gamma_closed_form(fr.A, fr.B);
    fr.checks.gamma_agreement = max_abs_diff(fr.gamma, fr.gamma_closed);

    fr.F = fundamental_from(fr.A, fr.B, fr.gamma);
    fr.checks.f_table = max_abs_diff(fr.F, f_component_table(fr.A, fr.B));
    double fsym = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                fsym = std::max(fsym, std::abs(fr.F(k, i, j) - fr.F(k, j, i)));
    fr.checks.f_symmetry = fsym;

    fr.theta = contract_trace(fr.g_inv, fr.F);
    fr.theta_star = contract_trace_q(fr.g_inv, fr.F);
    {
        Vec3 tc = theta_closed_form(fr.A, fr.B);
        Vec3 tsc = theta_star_closed_form(fr.A, fr.B);
        double d1 = 0.0, d2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            d1 = std::max(d1, std::abs(fr.theta[i] - tc[i]));
            d2 = std::max(d2, std::abs(fr.theta_star[i] - tsc[i]));
        }
        fr.checks.theta_closed = d1;
        fr.checks.theta_star_closed = d2;
    }
    {
        const Mat3 S = s_matrix();
        double r = 0.0;
        for (int i = 0; i < 3; ++i) {
            double s = fr.theta_star[i];
            for (int t = 0; t < 3; ++t) s += 0.5 * S(i, t) * fr.theta[t];
            r = std::max(r, std::abs(s));
        }
        fr.checks.theta_star_relation = r;
    }
    {
        double r = 0.0;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    double s = dg_entry(fr.A, fr.B, k, i, j);
                    for (int t = 0; t < 3; ++t)
                        s -= fr.gamma(t, k, i) * g_entry(fr.A, fr.B, t, j) +
                             fr.gamma(t, k, j) * g_entry(fr.A, fr.B, t, i);
                    r = std::max(r, std::abs(s));
                }
        fr.checks.metricity = r;
    }
    return fr;
}

Rank3 fundamental_tensor(const PointFrame& frame) {
    return fundamental_from(frame.A, frame.B, frame.gamma);
}

LeeForms lee_forms(const PointFrame& frame) {
    return {contract_trace(frame.g_inv, frame.F), contract_trace_q(frame.g_inv, frame.F)};
}

double check_F_identity(const PointFrame& fr) {
    double r = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double rhs =
                    (fr.g(k, j) * fr.theta[i] + fr.g(k, i) * fr.theta[j] +
                     fr.g_tilde(k, j) * fr.theta_star[i] + fr.g_tilde(k, i) * fr.theta_star[j]) /
                    3.0;
                r = std::max(r, std::abs(fr.F(k, i, j) - rhs));
            }
    return r;
}

double check_tilde_g_identities(const PointFrame& fr) {
    Vec3 theta_up{}, theta_star_up{};
    for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 3; ++s) {
            theta_up[k] += fr.g_inv(k, s) * fr.theta[s];
            theta_star_up[k] += fr.g_inv(k, s) * fr.theta_star[s];
        }
    double r = 0.0;
    for (int k = 0; k < 3; ++k) {
        double s1 = theta_star_up[k], s2 = -fr.theta[k] + 2.0 * fr.theta_star[k],
               s3 = fr.theta[k], s4 = 0.5 * (theta_up[k] + theta_star_up[k]);
        for (int s = 0; s < 3; ++s) {
            s1 += fr.g_tilde_inv(s, k) * fr.theta[s];
            s2 += fr.g_tilde(s, k) * theta_up[s];
            s3 += fr.g_tilde(s, k) * theta_star_up[s];
            s4 += fr.g_tilde_inv(s, k) * fr.theta_star[s];
        }
        r = std::max({r, std::abs(s1), std::abs(s2), std::abs(s3), std::abs(s4)});
    }
    return r;
}

std::vector<TableDiff> compare_frame_tables(const PointFrame& fr) {
    std::vector<TableDiff> out;
    auto component = [](const char* base, int k, int i, int j) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%s_%d%d%d", base, k + 1, i + 1, j + 1);
        return std::string(buf);
    };
    const Rank3 ftab = f_component_table(fr.A, fr.B);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                if (std::abs(fr.F(k, i, j) - ftab(k, i, j)) > kTolJet)
                    out.push_back({"F-components", component("F", k, i, j),
                                   fmt(fr.F(k, i, j)), fmt(ftab(k, i, j))});
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                if (std::abs(fr.gamma(k, i, j) - fr.gamma_closed(k, i, j)) > kTolJet)
                    out.push_back({"christoffel", component("Gamma", k, i, j),
                                   fmt(fr.gamma(k, i, j)), fmt(fr.gamma_closed(k, i, j))});
    const Vec3 tc = theta_closed_form(fr.A, fr.B);
    const Vec3 tsc = theta_star_closed_form(fr.A, fr.B);
    for (int i = 0; i < 3; ++i) {
        if (std::abs(fr.theta[i] - tc[i]) > kTolJet)
            out.push_back({"lee-form-theta", "theta_" + std::to_string(i + 1),
                           fmt(fr.theta[i]), fmt(tc[i])});
        if (std::abs(fr.theta_star[i] - tsc[i]) > kTolJet)
            out.push_back({"lee-form-theta-star", "theta*_" + std::to_string(i + 1),
                           fmt(fr.theta_star[i]), fmt(tsc[i])});
    }
    return out;
}

}  // namespace circ3
