#include "circ3/liegroup.hpp"

#include <algorithm>

namespace circ3::lie {

namespace {

Rat rat(long n, long d = 1) { return Rat(n, d); }

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

void chmax(Rat& acc, const Rat& v) {
    Rat a = abs_rat(v);
    if (a > acc) acc = a;
}

std::string fmt_rvec(const RVec3& v) {
    return "(" + rat_str(v[0]) + ", " + rat_str(v[1]) + ", " + rat_str(v[2]) + ")";
}

// gt(v, x_k) with gt = ones - I: sum of the components other than k.
Rat gt_pair(const RVec3& v, int k) {
    Rat s = 0;
    for (int t = 0; t < 3; ++t)
        if (t != k) s += v[t];
    return s;
}

RVec3 nabla_vec(const Connection& c, int i, const RVec3& v) {
    RVec3 r{};
    for (int t = 0; t < 3; ++t) {
        Rat s = 0;
        for (int s_i = 0; s_i < 3; ++s_i) s += v[s_i] * c.c[i][s_i][t];
        r[t] = s;
    }
    return r;
}

}  // namespace

Rat rat_parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rat(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational (use p/q or an integer): '" + text + "'");
    }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

LieAlgebraSpec reconstruct(const ReducedSpec& r) {
    LieAlgebraSpec s;
    s.lambda = r.lambda;
    s.nu = r.nu;
    s.mu = {r.nu[1] + r.lambda[2], r.nu[2] + r.lambda[0], r.nu[0] + r.lambda[1]};
    return s;
}

RVec3 jacobi_residual(const LieAlgebraSpec& s) {
    const Rat &l1 = s.lambda[0], &l2 = s.lambda[1], &l3 = s.lambda[2];
    const Rat &m1 = s.mu[0], &m2 = s.mu[1], &m3 = s.mu[2];
    const Rat &n1 = s.nu[0], &n2 = s.nu[1], &n3 = s.nu[2];
    return {n1 * (l2 + m3) - l1 * n2 - m1 * n3,
            l3 * (m1 + n2) - l1 * m3 - l2 * n3,
            m2 * (n3 - l1) + l2 * m1 - n2 * m3};
}

RVec3 mu_constraint_residual(const LieAlgebraSpec& s) {
    return {s.mu[0] - s.nu[1] - s.lambda[2], s.mu[1] - s.nu[2] - s.lambda[0],
            s.mu[2] - s.nu[0] - s.lambda[1]};
}

RVec3 reduced_jacobi_residual(const ReducedSpec& r) {
    const Rat &l1 = r.lambda[0], &l2 = r.lambda[1], &l3 = r.lambda[2];
    const Rat &n1 = r.nu[0], &n2 = r.nu[1], &n3 = r.nu[2];
    return {2 * n1 * l2 + n1 * n1 - l1 * n2 - n2 * n3 - l3 * n3,
            2 * n2 * l3 + l3 * l3 - l2 * n3 - l1 * l2 - l1 * n1,
            -l1 * l1 + n3 * n3 + l2 * l3 - n1 * n2};
}

bool is_zero(const RVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Brackets brackets(const LieAlgebraSpec& s) {
    Brackets b{};
    for (int k = 0; k < 3; ++k) {
        b.c[0][1][k] = s.lambda[k];
        b.c[1][0][k] = -s.lambda[k];
        b.c[1][2][k] = s.nu[k];
        b.c[2][1][k] = -s.nu[k];
        b.c[0][2][k] = s.mu[k];
        b.c[2][0][k] = -s.mu[k];
    }
    return b;
}

Connection koszul_connection(const LieAlgebraSpec& s) {
    const RVec3 jac = jacobi_residual(s);
    if (!is_zero(jac)) throw JacobiError(jac);
    const Brackets b = brackets(s);
    Connection c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                c.c[i][j][k] = (b.c[i][j][k] + b.c[k][i][j] + b.c[k][j][i]) / 2;
    return c;
}

Rat torsion_residual(const Connection& c, const Brackets& b) {
    Rat r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) chmax(r, c.c[i][j][k] - c.c[j][i][k] - b.c[i][j][k]);
    return r;
}

Rat metric_compatibility_residual(const Connection& c) {
    Rat r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) chmax(r, c.c[i][j][k] + c.c[i][k][j]);
    return r;
}

LieFrame lie_fundamental(const LieAlgebraSpec& s) {
    const Connection c = koszul_connection(s);
    LieFrame f;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                RVec3 nij{c.c[i][j][0], c.c[i][j][1], c.c[i][j][2]};
                RVec3 nik{c.c[i][k][0], c.c[i][k][1], c.c[i][k][2]};
                f.F[i][j][k] = -gt_pair(nij, k) - gt_pair(nik, j);
            }
    for (int k = 0; k < 3; ++k) {
        Rat th = 0, ts = 0;
        for (int i = 0; i < 3; ++i) {
            th += f.F[i][i][k];
            ts += f.F[i][(i + 1) % 3][k];
        }
        f.theta[k] = th;
        f.theta_star[k] = ts;
    }
    return f;
}

Rat lie_f_identity_residual(const LieFrame& f) {
    Rat r = 0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Rat g_kj = (k == j) ? 1 : 0;
                const Rat g_ki = (k == i) ? 1 : 0;
                const Rat gt_kj = (k == j) ? 0 : 1;
                const Rat gt_ki = (k == i) ? 0 : 1;
                const Rat rhs = (g_kj * f.theta[i] + g_ki * f.theta[j] +
                                 gt_kj * f.theta_star[i] + gt_ki * f.theta_star[j]) /
                                3;
                chmax(r, f.F[i][j][k] - rhs);
            }
    return r;
}

LieCurvature lie_curvature(const LieAlgebraSpec& s) {
    const Connection c = koszul_connection(s);
    const Brackets b = brackets(s);
    LieCurvature out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                RVec3 ek{};
                ek[k] = 1;
                const RVec3 t1 = nabla_vec(c, i, nabla_vec(c, j, ek));
                const RVec3 t2 = nabla_vec(c, j, nabla_vec(c, i, ek));
                RVec3 t3{};
                for (int t = 0; t < 3; ++t) {
                    Rat acc = 0;
                    for (int si = 0; si < 3; ++si) acc += b.c[i][j][si] * c.c[si][k][t];
                    t3[t] = acc;
                }
                // orthonormal g: the lowered component R_ijkl is just the
                // l-th coefficient of R(x_i,x_j)x_k
                for (int l = 0; l < 3; ++l) out.R[i][j][k][l] = t1[l] - t2[l] - t3[l];
            }
    for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb) {
            Rat s_ = 0;
            for (int i = 0; i < 3; ++i) s_ += out.R[i][a][bb][i];
            out.rho[a][bb] = s_;
        }
    out.tau = out.rho[0][0] + out.rho[1][1] + out.rho[2][2];
    // gt^{-1} by exact adjugate of (ones - I): diagonal -1/2, off 1/2
    RMat3 gtinv{};
    {
        // adjugate / det of the constant matrix with 0 diagonal, 1 off
        // det = 2; cof diagonal = -1, off-diagonal = 1
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gtinv[i][j] = (i == j) ? rat(-1, 2) : rat(1, 2);
    }
    Rat ts = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ts += gtinv[i][j] * out.rho[i][j];
    out.tau_star = ts;
    out.k = {out.R[1][2][1][2], out.R[0][2][0][2], out.R[0][1][0][1]};
    return out;
}

std::array<Rat, 2> invariance_residual(const ReducedSpec& r) {
    const Rat &l1 = r.lambda[0], &l2 = r.lambda[1], &l3 = r.lambda[2];
    const Rat &n1 = r.nu[0], &n2 = r.nu[1], &n3 = r.nu[2];
    return {l1 * l1 + l3 * l3 + l1 * n3 + l3 * n3 + l1 * l3 + l2 * n1 + l3 * n1 + 2 * l3 * n2,
            n1 * n1 + n3 * n3 + l3 * n2 + l1 * n3 + l3 * n1 + l1 * n1 + n3 * n1 + 2 * l2 * n1};
}

ReducedSpec case_spec(CaseFamily family, const RVec3& p) {
    switch (family) {
        case CaseFamily::A:
            return {{p[0], p[1], Rat(0)}, {Rat(0), p[2], -p[0]}};
        case CaseFamily::B:
            return {{p[0], p[1], -p[0] - p[1]}, {-p[0] - p[1], p[0], p[1]}};
        case CaseFamily::C:
            return {{p[0], p[1], -p[0] - p[1]}, {p[0], p[1], -p[0] - p[1]}};
    }
    throw std::logic_error("unreachable");
}

RRank3 printed_f_table(const LieAlgebraSpec& s) {
    const Rat &l1 = s.lambda[0], &l2 = s.lambda[1], &l3 = s.lambda[2];
    const Rat &m1 = s.mu[0], &m2 = s.mu[1], &m3 = s.mu[2];
    const Rat &n1 = s.nu[0], &n2 = s.nu[1], &n3 = s.nu[2];
    RRank3 f{};
    auto set = [&f](int i, int j, int k, const Rat& v) {
        f[i - 1][j - 1][k - 1] = v;
        f[i - 1][k - 1][j - 1] = v;
    };
    set(1, 1, 1, 2 * l1 + 2 * m1);
    set(1, 1, 2, (2 * m1 + m2 - l3 + n1) / 2);
    set(1, 1, 3, (2 * l1 + l3 - m2 - n1) / 2);
    set(1, 2, 2, -2 * l1 + n1 + m2 - l3);
    set(1, 2, 3, -l1 - m1);
    set(2, 2, 1, (l3 + n1 + m2 + 2 * n2) / 2);
    set(2, 2, 2, -2 * l2 + 2 * n2);
    set(2, 2, 3, -(2 * l2 + n1 + m2 + l3) / 2);
    set(2, 1, 1, 2 * l2 + n1 + m2 + l3);
    set(2, 1, 3, l2 - n2);
    set(1, 3, 3, -2 * m1 - n1 - m2 + l3);
    set(2, 3, 3, -l3 - n1 - 2 * n2 - m2);
    set(3, 1, 1, l3 - n1 + m2 + 2 * m3);
    set(3, 1, 2, n3 + m3);
    set(3, 1, 3, -(-l1 + n1 - m2 + 2 * n3) / 2);  // printed form (suspected l1/l3 typo)
    set(3, 2, 2, -l3 + n1 - m2 + 2 * n3);
    set(3, 3, 2, -(l3 - n1 + m2 + 2 * m3) / 2);
    set(3, 3, 3, -2 * m3 - 2 * n3);
    return f;
}

RVec3 printed_theta_table(const LieAlgebraSpec& s) {
    const Rat &l1 = s.lambda[0], &l2 = s.lambda[1], &l3 = s.lambda[2];
    const Rat &m1 = s.mu[0], &m2 = s.mu[1], &m3 = s.mu[2];
    const Rat &n1 = s.nu[0], &n2 = s.nu[1], &n3 = s.nu[2];
    return {2 * l1 + l3 + 2 * m1 + m2 + n2 - n3, -2 * l2 - l3 + m1 - m3 + n1 + 2 * n2,
            l1 - l2 - m2 - 2 * m3 - n1 - 2 * n3};
}

RVec3 printed_theta_star_table(const LieAlgebraSpec& s) {
    const Rat &l1 = s.lambda[0], &l2 = s.lambda[1], &l3 = s.lambda[2];
    const Rat &m1 = s.mu[0], &m2 = s.mu[1], &m3 = s.mu[2];
    const Rat &n1 = s.nu[0], &n2 = s.nu[1], &n3 = s.nu[2];
    return {-(-l1 - 3 * l2 - 2 * l3 - m1 - 2 * m2 - 3 * m3 + n2 - n3) / 2,
            -(3 * l1 + l2 + 2 * l3 + m1 - m3 - 2 * n1 - n2 - 3 * n3) / 2,
            -(l1 - l2 + 3 * m1 + 2 * m2 + m3 + 2 * n1 + 3 * n2 + n3) / 2};
}

std::array<RTableEntry, 6> printed_r_table(const ReducedSpec& r) {
    const Rat &l1 = r.lambda[0], &l2 = r.lambda[1], &l3 = r.lambda[2];
    const Rat &n1 = r.nu[0], &n2 = r.nu[1], &n3 = r.nu[2];
    auto sq = [](const Rat& x) { return x * x; };
    std::array<RTableEntry, 6> t;
    t[0] = {0, 1, 0, 1,
            -sq(l1 + n1 + n3) / 4 + 3 * sq(l3) / 4 + sq(l1) + sq(l2) + n2 * l3 + sq(n2) +
                l1 * l3 / 2 + n3 * l3 / 2 - l3 * n1 / 2};
    t[1] = {0, 2, 0, 2,
            3 * sq(l1 + n3) / 4 - sq(l3 - n1) / 4 + sq(l3 + n2) + sq(l2 + n1) +
                (l1 + n3) * (n1 + l3) / 2 - l1 * n3};
    t[2] = {1, 2, 1, 2,
            -sq(l1) / 4 + sq(l2) - sq(l3) / 4 + 3 * sq(n1) / 4 + sq(n2) + 3 * sq(n3) / 4 +
                l1 * (-n3 + n1 - l3) / 2 - l3 * n3 / 2 + l2 * n1 - n1 * l3 / 2 + n1 * n3 / 2};
    t[3] = {0, 1, 1, 2, -l2 * l3 + l1 * n1 + sq(l1) + l1 * n3 + l3 * n3};
    t[4] = {0, 1, 0, 2, l2 * (l1 + n1 + n3) + l3 * (l1 + l2 + n1)};
    t[5] = {0, 2, 2, 1, -l1 * n2 - n2 * n3 - l3 * n1 - n2 * l3 - n1 * n3 - n2 * n1};
    return t;
}

std::vector<TableDiff> compare_section5_tables(const LieAlgebraSpec& s) {
    std::vector<TableDiff> out;
    const LieFrame f = lie_fundamental(s);
    const RRank3 ftab = printed_f_table(s);
    auto component = [](const char* base, int i, int j, int k) {
        return std::string(base) + "_" + std::to_string(i + 1) + std::to_string(j + 1) +
               std::to_string(k + 1);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = j; k < 3; ++k)
                if (f.F[i][j][k] != ftab[i][j][k])
                    out.push_back({"invariant-frame-F", component("F", i, j, k),
                                   rat_str(f.F[i][j][k]), rat_str(ftab[i][j][k])});
    const RVec3 th = printed_theta_table(s);
    const RVec3 ts = printed_theta_star_table(s);
    for (int i = 0; i < 3; ++i) {
        if (f.theta[i] != th[i])
            out.push_back({"invariant-frame-theta", "theta_" + std::to_string(i + 1),
                           rat_str(f.theta[i]), rat_str(th[i])});
        if (f.theta_star[i] != ts[i])
            out.push_back({"invariant-frame-theta-star", "theta*_" + std::to_string(i + 1),
                           rat_str(f.theta_star[i]), rat_str(ts[i])});
    }
    return out;
}

std::vector<TableDiff> compare_r_table(const ReducedSpec& r) {
    std::vector<TableDiff> out;
    const LieCurvature c = lie_curvature(reconstruct(r));
    for (const RTableEntry& e : printed_r_table(r)) {
        const Rat& d = c.R[e.i][e.j][e.k][e.l];
        if (d != e.printed)
            out.push_back({"invariant-frame-R",
                           "R_" + std::to_string(e.i + 1) + std::to_string(e.j + 1) +
                               std::to_string(e.k + 1) + std::to_string(e.l + 1),
                           rat_str(d), rat_str(e.printed)});
    }
    return out;
}

namespace {

struct RatFit {
    Rat beta, gamma, residual;
};

// exact least squares against g = I, gt = ones - I over the six
// independent components; the normal matrix is diag(3, 3)
RatFit einstein_fit_exact(const RMat3& rho) {
    RatFit f{0, 0, 0};
    f.beta = (rho[0][0] + rho[1][1] + rho[2][2]) / 3;
    f.gamma = (rho[0][1] + rho[0][2] + rho[1][2]) / 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rat model = (i == j) ? f.beta : f.gamma;
            chmax(f.residual, rho[i][j] - model);
        }
    return f;
}

}  // namespace

PropositionReport verify_case_propositions(CaseFamily family, const RVec3& params) {
    PropositionReport rep;
    rep.family = family;
    rep.params = params;
    const ReducedSpec red = case_spec(family, params);
    const LieAlgebraSpec s = reconstruct(red);
    const Rat l1 = red.lambda[0], l2 = red.lambda[1];

    auto clause = [&rep](const std::string& name, bool pass, const std::string& detail = "",
                         bool regression = false) {
        rep.clauses.push_back({name, pass, regression, detail});
    };

    clause("reduced-jacobi-zero", is_zero(reduced_jacobi_residual(red)));
    const auto inv = invariance_residual(red);
    clause("invariance-system-zero", inv[0] == 0 && inv[1] == 0);

    const LieFrame f = lie_fundamental(s);
    const LieCurvature c = lie_curvature(s);

    Rat k_expected, tau_expected;
    switch (family) {
        case CaseFamily::A: {
            const Rat n2 = params[2];
            k_expected = l1 * l1 + l2 * l2 + n2 * n2;
            tau_expected = -6 * k_expected;
            break;
        }
        case CaseFamily::B:
            k_expected = 3 * (l1 - l2) * (l1 - l2) / 4;
            tau_expected = -Rat(9, 2) * (l1 - l2) * (l1 - l2);
            break;
        case CaseFamily::C:
            k_expected = 2 * (l1 * l1 + l1 * l2 + l2 * l2);
            tau_expected = -12 * (l1 * l1 + l1 * l2 + l2 * l2);
            break;
    }
    rep.tau = c.tau;
    rep.k = c.k[0];

    clause("sectional-curvatures-equal", c.k[0] == c.k[1] && c.k[1] == c.k[2],
           "k = " + fmt_rvec(c.k));
    clause("k-closed-form", c.k[0] == k_expected && c.k[1] == k_expected && c.k[2] == k_expected,
           "expected " + rat_str(k_expected));
    clause("tau-closed-form", c.tau == tau_expected,
           "tau = " + rat_str(c.tau) + ", expected " + rat_str(tau_expected));

    const RatFit fit = einstein_fit_exact(c.rho);
    clause("einstein-fit-exact", fit.residual == 0,
           "beta = " + rat_str(fit.beta) + ", gamma = " + rat_str(fit.gamma));

    // R component structure: the three plane components equal k; the three
    // mixed independent components as each case requires.
    const Rat &R1212 = c.R[0][1][0][1], &R1313 = c.R[0][2][0][2], &R2323 = c.R[1][2][1][2];
    const Rat &R1213 = c.R[0][1][0][2], &R1223 = c.R[0][1][1][2], &R1332 = c.R[0][2][2][1];
    const bool planes_equal_k =
        R1212 == k_expected && R1313 == k_expected && R2323 == k_expected;
    if (family == CaseFamily::C) {
        const Rat R1321 = c.R[0][2][1][0];
        clause("R-printed-equalities",
               planes_equal_k && R1332 == k_expected && R1223 == k_expected &&
                   R1321 == k_expected);
    } else {
        clause("R-printed-equalities",
               planes_equal_k && R1213 == 0 && R1223 == 0 && R1332 == 0);
    }

    // rho
    RMat3 rho_printed{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            switch (family) {
                case CaseFamily::A: rho_printed[i][j] = (i == j) ? -2 * k_expected : Rat(0); break;
                case CaseFamily::B:
                    rho_printed[i][j] = (i == j) ? -Rat(3, 2) * (l1 - l2) * (l1 - l2) : Rat(0);
                    break;
                case CaseFamily::C: rho_printed[i][j] = -4 * (l1 * l1 + l1 * l2 + l2 * l2); break;
            }
        }
    bool rho_match = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c.rho[i][j] != rho_printed[i][j]) {
                rho_match = false;
                rep.discrepancies.push_back(
                    {"case-rho", "rho_" + std::to_string(i + 1) + std::to_string(j + 1),
                     rat_str(c.rho[i][j]), rat_str(rho_printed[i][j])});
            }
    // For case C the printed off-diagonal is a regression target only; the
    // derivational statement that gates is the exact almost-Einstein fit.
    clause("rho-printed-table", rho_match, "", family == CaseFamily::C);

    // F / theta / theta* per case
    if (family == CaseFamily::C) {
        bool fz = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (f.F[i][j][k] != 0) fz = false;
        clause("F-zero", fz);
        clause("theta-zero", f.theta[0] == 0 && f.theta[1] == 0 && f.theta[2] == 0);
        clause("theta-star-zero",
               f.theta_star[0] == 0 && f.theta_star[1] == 0 && f.theta_star[2] == 0);
        // [Q x_i, Q x_j] = [x_i, x_j] with the basis shift
        const Brackets b = brackets(s);
        bool ab = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (b.c[(i + 1) % 3][(j + 1) % 3][k] != b.c[i][j][k]) ab = false;
        clause("abelian-structure", ab);
    } else {
        // case F tables as printed
        RRank3 ftab{};
        RVec3 th{}, ts{};
        auto set = [&ftab](int i, int j, int k, const Rat& v) {
            ftab[i - 1][j - 1][k - 1] = v;
            ftab[i - 1][k - 1][j - 1] = v;
        };
        if (family == CaseFamily::A) {
            const Rat n2 = params[2];
            set(1, 1, 1, 2 * l1 + 2 * n2);
            set(1, 1, 2, n2);
            set(1, 1, 3, l1);
            set(1, 2, 2, -2 * l1);
            set(1, 2, 3, -l1 - n2);
            set(2, 2, 1, n2);
            set(2, 2, 2, -2 * l2 + 2 * n2);
            set(2, 2, 3, -l2);
            set(2, 1, 1, 2 * l2);
            set(2, 1, 3, l2 - n2);
            set(1, 3, 3, -2 * n2);
            set(2, 3, 3, -2 * n2);
            set(3, 1, 2, l2 - l1);
            set(3, 1, 3, l1);
            set(3, 3, 2, -l2);
            set(3, 3, 3, -2 * l2 + 2 * l1);
            set(3, 1, 1, 2 * l2);
            set(3, 2, 2, -2 * l1);
            th = {3 * (l1 + n2), 3 * (n2 - l2), 3 * (l1 - l2)};
            ts = {3 * l2, -3 * l1, -3 * n2};
        } else {
            const Rat d1 = 2 * (l1 - l2), dh = (l1 - l2) / 2, dm = l2 - l1;
            set(1, 1, 1, d1);
            set(2, 2, 2, d1);
            set(3, 3, 3, d1);
            for (auto [i, j, k] : {std::array<int, 3>{1, 1, 2}, {2, 2, 1}, {2, 2, 3},
                                   {3, 1, 3}, {3, 3, 2}, {1, 1, 3}})
                set(i, j, k, dh);
            for (auto [i, j, k] : {std::array<int, 3>{1, 2, 2}, {1, 2, 3}, {2, 1, 1}, {2, 1, 3},
                                   {1, 3, 3}, {2, 3, 3}, {3, 1, 1}, {3, 1, 2}, {3, 2, 2}})
                set(i, j, k, dm);
            th = {3 * (l1 - l2), 3 * (l1 - l2), 3 * (l1 - l2)};
            ts = {3 * (l2 - l1) / 2, 3 * (l2 - l1) / 2, 3 * (l2 - l1) / 2};
        }
        bool fmatch = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (f.F[i][j][k] != ftab[i][j][k]) fmatch = false;
        clause("F-case-table", fmatch);
        clause("theta-case-table", f.theta == th && f.theta_star == ts);
    }

    rep.pass = true;
    for (const auto& cl : rep.clauses)
        if (!cl.regression && !cl.pass) rep.pass = false;
    return rep;
}

}  // namespace circ3::lie
