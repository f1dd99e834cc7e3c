#include "circ3/curvature.hpp"

namespace circ3 {

namespace {

struct DualMat {
    Dual3 e[3][3];
};

// Adjugate inverse in Dual3 arithmetic; the metric is invertible wherever
// the field guards hold.
DualMat invert_dual(const DualMat& a) {
    auto co = [&a](int i0, int i1, int j0, int j1) {
        return a.e[i0][j0] * a.e[i1][j1] - a.e[i0][j1] * a.e[i1][j0];
    };
    Dual3 det = a.e[0][0] * co(1, 2, 1, 2) - a.e[0][1] * co(1, 2, 0, 2) + a.e[0][2] * co(1, 2, 0, 1);
    DualMat r;
    r.e[0][0] = co(1, 2, 1, 2) / det;
    r.e[0][1] = (a.e[0][2] * a.e[2][1] - a.e[0][1] * a.e[2][2]) / det;
    r.e[0][2] = (a.e[0][1] * a.e[1][2] - a.e[0][2] * a.e[1][1]) / det;
    r.e[1][0] = (a.e[1][2] * a.e[2][0] - a.e[1][0] * a.e[2][2]) / det;
    r.e[1][1] = (a.e[0][0] * a.e[2][2] - a.e[0][2] * a.e[2][0]) / det;
    r.e[1][2] = (a.e[0][2] * a.e[1][0] - a.e[0][0] * a.e[1][2]) / det;
    r.e[2][0] = (a.e[1][0] * a.e[2][1] - a.e[1][1] * a.e[2][0]) / det;
    r.e[2][1] = (a.e[0][1] * a.e[2][0] - a.e[0][0] * a.e[2][1]) / det;
    r.e[2][2] = (a.e[0][0] * a.e[1][1] - a.e[0][1] * a.e[1][0]) / det;
    return r;
}

}  // namespace

MetricJets metric_jets_g(const Jet2& A, const Jet2& B) {
    MetricJets m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.e[i][j] = (i == j) ? A : B;
    return m;
}

MetricJets metric_jets_gt(const Jet2& A, const Jet2& B) {
    MetricJets m;
    const Jet2 diag = 2.0 * B;
    const Jet2 off = A + B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.e[i][j] = (i == j) ? diag : off;
    return m;
}

CurvatureSide curvature_of(const MetricJets& m) {
    DualMat g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.e[i][j] = dual_of(m.e[i][j]);
    // dm[k][i][j] = d_k g_ij carrying its own gradient
    Dual3 dm[3][3][3];
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dm[k][i][j] = dual_partial(m.e[i][j], k);
    const DualMat inv = invert_dual(g);

    Dual3 gam[3][3][3];
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                Dual3 s = dual_const(0.0);
                for (int t = 0; t < 3; ++t)
                    s = s + inv.e[k][t] * (dm[i][t][j] + dm[j][t][i] - dm[t][i][j]);
                gam[k][i][j] = 0.5 * s;
                gam[k][j][i] = gam[k][i][j];
            }

    CurvatureSide out;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                out.gamma(k, i, j) = gam[k][i][j].v;
                for (int mm = 0; mm < 3; ++mm) out.dgamma(mm, k, i, j) = gam[k][i][j].g[mm];
            }

    // R^l_kij, then lowered with the metric values
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double up[3];
                for (int l = 0; l < 3; ++l) {
                    double s = out.dgamma(i, l, j, k) - out.dgamma(j, l, i, k);
                    for (int t = 0; t < 3; ++t)
                        s += out.gamma(l, i, t) * out.gamma(t, j, k) -
                             out.gamma(l, j, t) * out.gamma(t, i, k);
                    up[l] = s;
                }
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int t = 0; t < 3; ++t) s += up[t] * g.e[t][l].v;
                    out.R(i, j, k, l) = s;
                }
            }

    Mat3 invv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) invv(i, j) = inv.e[i][j].v;
    out.rho = contract_ricci(invv, out.R);
    out.tau = contract_scalar(invv, out.rho);
    return out;
}

CurvatureFrame curvature_from(const PointFrame& fr) {
    CurvatureFrame cf;
    const CurvatureSide cg = curvature_of(metric_jets_g(fr.A, fr.B));
    const CurvatureSide cgt = curvature_of(metric_jets_gt(fr.A, fr.B));
    cf.R = cg.R;
    cf.rho = cg.rho;
    cf.tau = cg.tau;
    cf.tilde_gamma = cgt.gamma;
    cf.R_tilde = cgt.R;
    cf.rho_tilde = cgt.rho;
    cf.tau_tilde = cgt.tau;
    cf.tau_star = contract_scalar(fr.g_tilde_inv, cg.rho);
    cf.tau_tilde_star = contract_scalar(fr.g_inv, cgt.rho);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) cf.T(k, i, j) = cgt.gamma(k, i, j) - cg.gamma(k, i, j);
    const Rank3 closed = deformation_closed_form(fr);
    double agree = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                agree = std::max(agree, std::abs(cf.T(k, i, j) - closed(k, i, j)));
    cf.t_closed_agreement = agree;
    return cf;
}

CurvatureFrame curvature_at(const MetricField& field, const Vec3& p) {
    return curvature_from(frame_at(field, p));
}

double riemann_symmetry_residual(const Rank4& R) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    r = std::max(r, std::abs(R(i, j, k, l) + R(j, i, k, l)));
                    r = std::max(r, std::abs(R(i, j, k, l) + R(i, j, l, k)));
                    r = std::max(r, std::abs(R(i, j, k, l) - R(k, l, i, j)));
                }
    return r;
}

double first_bianchi_residual(const Rank4& R) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    r = std::max(r, std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)));
    return r;
}

double ricci_decomposition_residual(const Rank4& R, const Mat3& rho, double tau, const Mat3& g) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double rhs =
                        -(g(i, k) * rho(j, l) + g(j, l) * rho(i, k) - g(i, l) * rho(j, k) -
                          g(j, k) * rho(i, l)) +
                        0.5 * tau * (g(i, k) * g(j, l) - g(i, l) * g(j, k));
                    r = std::max(r, std::abs(R(i, j, k, l) - rhs));
                }
    return r;
}

double check_ricci_relation(const CurvatureFrame& cf, const PointFrame& fr) {
    const double c1 = (cf.tau_tilde_star - cf.tau) / 3.0;
    const double c2 =
        (2.0 * cf.tau_tilde - 2.0 * cf.tau_star + cf.tau_tilde_star - cf.tau) / 6.0;
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r = std::max(r, std::abs(cf.rho_tilde(i, j) - cf.rho(i, j) - c1 * fr.g(i, j) -
                                     c2 * fr.g_tilde(i, j)));
    return r;
}

Rank3 deformation_closed_form(const PointFrame& fr) {
    Vec3 theta_up{}, theta_star_up{};
    for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 3; ++s) {
            theta_up[k] += fr.g_inv(k, s) * fr.theta[s];
            theta_star_up[k] += fr.g_inv(k, s) * fr.theta_star[s];
        }
    Rank3 t;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                t(k, i, j) = -(2.0 * fr.g(i, j) * theta_star_up[k] +
                               fr.g_tilde(i, j) * (theta_up[k] + theta_star_up[k])) /
                             6.0;
    return t;
}

EinsteinFit almost_einstein_fit(const Mat3& rho, const Mat3& g, const Mat3& gt) {
    // Normal equations over the six upper-triangular components.
    double gg = 0.0, ggt = 0.0, gtgt = 0.0, gr = 0.0, gtr = 0.0, scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            gg += g(i, j) * g(i, j);
            ggt += g(i, j) * gt(i, j);
            gtgt += gt(i, j) * gt(i, j);
            gr += g(i, j) * rho(i, j);
            gtr += gt(i, j) * rho(i, j);
            scale = std::max({scale, std::abs(g(i, j)), std::abs(gt(i, j))});
        }
    const double det = gg * gtgt - ggt * ggt;
    if (!(det > 1e-12 * scale * scale * scale * scale))
        throw DegenerateFitError("metric pair is linearly dependent, Einstein fit is degenerate");
    EinsteinFit fit;
    fit.beta = (gr * gtgt - gtr * ggt) / det;
    fit.gamma = (gtr * gg - gr * ggt) / det;
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r = std::max(r, std::abs(rho(i, j) - fit.beta * g(i, j) - fit.gamma * gt(i, j)));
    fit.residual = r;
    return fit;
}

double flat_conclusion_residual(const Mat3& rho, double t1, double t2, const Mat3& g,
                                const Mat3& gt) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r = std::max(r, std::abs(rho(i, j) - (t1 / 3.0) * g(i, j) -
                                     ((t1 + 2.0 * t2) / 6.0) * gt(i, j)));
    return r;
}

FlatCorollaryReport check_flat_corollaries(const CurvatureFrame& cf, const PointFrame& fr) {
    FlatCorollaryReport rep;
    rep.tilde_flat = max_abs(cf.R_tilde) <= kTolJet;
    if (rep.tilde_flat)
        rep.tilde_conclusion =
            flat_conclusion_residual(cf.rho, cf.tau, cf.tau_star, fr.g, fr.g_tilde);
    rep.g_flat = max_abs(cf.R) <= kTolJet;
    if (rep.g_flat)
        rep.g_conclusion = flat_conclusion_residual(cf.rho_tilde, cf.tau_tilde_star,
                                                    cf.tau_tilde, fr.g, fr.g_tilde);
    return rep;
}

}  // namespace circ3
