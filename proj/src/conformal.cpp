#include "circ3/conformal.hpp"

namespace circ3 {

MetricField barred_field(const ConformalData& data) {
    return {expr_mul(data.alpha, data.base.A), expr_mul(data.alpha, data.base.B)};
}

BarredFrame barred_frame_at(const ConformalData& data, const Vec3& p) {
    BarredFrame bf;
    bf.alpha = eval_jet2(data.alpha, p);
    if (!(bf.alpha.v > 0.0))
        throw std::domain_error("conformal factor must be positive, alpha = " +
                                std::to_string(bf.alpha.v));
    bf.base = frame_at(data.base, p);
    bf.frame = frame_at(barred_field(data), p);

    // Gamma-bar = Gamma + (1/2a)(d^k_j a_i + d^k_i a_j - g_ij g^{ks} a_s)
    const double a = bf.alpha.v;
    const Vec3& da = bf.alpha.g;
    Vec3 grad_up{};
    for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 3; ++s) grad_up[k] += bf.base.g_inv(k, s) * da[s];
    double agree = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double shift = ((k == j ? da[i] : 0.0) + (k == i ? da[j] : 0.0) -
                                      bf.base.g(i, j) * grad_up[k]) /
                                     (2.0 * a);
                agree = std::max(agree, std::abs(bf.frame.gamma(k, i, j) -
                                                 (bf.base.gamma(k, i, j) + shift)));
            }
    bf.gamma_shift_agreement = agree;

    // theta-bar = theta + (3/2a) Phi da ; theta-bar* = theta* - (3/2a) da
    const Mat3 Phi = phi_matrix();
    const Vec3 phi_da = mat_vec(Phi, da);
    double lee = 0.0;
    for (int i = 0; i < 3; ++i) {
        bf.theta_formula[i] = bf.base.theta[i] + 1.5 / a * phi_da[i];
        bf.theta_star_formula[i] = bf.base.theta_star[i] - 1.5 / a * da[i];
        lee = std::max(lee, std::abs(bf.theta_formula[i] - bf.frame.theta[i]));
        lee = std::max(lee, std::abs(bf.theta_star_formula[i] - bf.frame.theta_star[i]));
    }
    bf.lee_agreement = lee;

    const Mat3 S = s_matrix();
    double rel = 0.0;
    for (int i = 0; i < 3; ++i) {
        double s = bf.theta_star_formula[i];
        for (int t = 0; t < 3; ++t) s += 0.5 * S(i, t) * bf.theta_formula[t];
        rel = std::max(rel, std::abs(s));
    }
    bf.theta_star_relation = rel;
    return bf;
}

double check_barred_F_identity(const BarredFrame& bf) { return check_F_identity(bf.frame); }

CorollaryPointCheck check_corollary_at(const ConformalData& data, const Vec3& p) {
    if (!data.base.A.is_constant() || !data.base.B.is_constant())
        throw std::invalid_argument(
            "corollary check requires a flat base: constant A and B expressions");
    CorollaryPointCheck out;
    const BarredFrame bf = barred_frame_at(data, p);
    out.alpha_value = bf.alpha.v;
    out.alpha_grad = bf.alpha.g;
    out.max_F_bar = max_abs(bf.frame.F);

    const Vec3 phi_da = mat_vec(phi_matrix(), bf.alpha.g);
    const Vec3& da = bf.alpha.g;
    double agree = 0.0, literal = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // Half formula in base metrics; the identity-derived form.
                const double half =
                    0.5 * (bf.base.g(k, j) * phi_da[i] + bf.base.g(k, i) * phi_da[j] -
                           bf.base.g_tilde(k, j) * da[i] - bf.base.g_tilde(k, i) * da[j]);
                // Same shape with the rescaled metrics substituted verbatim
                // (differs by a factor alpha; kept for the discrepancy log).
                const double verbatim =
                    0.5 * (bf.frame.g(k, j) * phi_da[i] + bf.frame.g(k, i) * phi_da[j] -
                           bf.frame.g_tilde(k, j) * da[i] - bf.frame.g_tilde(k, i) * da[j]);
                agree = std::max(agree, std::abs(bf.frame.F(k, i, j) - half));
                literal = std::max(literal, std::abs(bf.frame.F(k, i, j) - verbatim));
            }
    out.half_formula_agreement = agree;
    out.literal_form_deviation = literal;
    return out;
}

}  // namespace circ3
