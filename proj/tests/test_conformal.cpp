#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circ3/conformal.hpp"
#include "support.hpp"

using namespace circ3;
using namespace circ3::testing;

TEST_CASE("alpha = 1 reproduces the base frame") {
    const ConformalData data{field_of("2+x1^2", "1"), parse("1")};
    const BarredFrame bf = barred_frame_at(data, {0.5, 0.7, 0.9});
    CHECK(max_abs_diff(bf.frame.g, bf.base.g) == 0.0);
    CHECK(bf.gamma_shift_agreement <= kTolExact);
    CHECK(bf.lee_agreement <= kTolExact);
    CHECK(check_barred_F_identity(bf) <= kTolJet);
}

TEST_CASE("constant alpha leaves the connection unchanged") {
    const ConformalData data{field_of("2+x1^2", "1+0.1*x2"), parse("2")};
    const BarredFrame bf = barred_frame_at(data, {0.4, 0.6, 1.2});
    double d = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                d = std::max(d, std::abs(bf.frame.gamma(k, i, j) - bf.base.gamma(k, i, j)));
    CHECK(d <= kTolLinalg);
    double lee = 0.0;
    for (int i = 0; i < 3; ++i) {
        lee = std::max(lee, std::abs(bf.frame.theta[i] - bf.base.theta[i]));
        lee = std::max(lee, std::abs(bf.frame.theta_star[i] - bf.base.theta_star[i]));
    }
    CHECK(lee <= kTolLinalg);
}

TEST_CASE("shift formula equals direct recomputation for exp(x1)") {
    const ConformalData data{field_of("2", "1"), parse("exp(x1)")};
    const BarredFrame bf = barred_frame_at(data, {0.0, 0.0, 0.0});
    CHECK(bf.gamma_shift_agreement <= kTolJet);
}

TEST_CASE("frozen transformed Lee forms over a flat base") {
    // base constant so theta = theta* = 0; at the origin alpha = 1 and
    // grad alpha = (1,0,0): theta-bar = (3/2) Phi e1 = (0, 3/2, 3/2),
    // theta-bar* = -(3/2) e1
    const ConformalData data{field_of("2", "1"), parse("exp(x1)")};
    const BarredFrame bf = barred_frame_at(data, {0.0, 0.0, 0.0});
    CHECK(bf.frame.theta[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(bf.frame.theta[1] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(bf.frame.theta[2] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(bf.frame.theta_star[0] == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(bf.frame.theta_star[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(bf.frame.theta_star[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(bf.lee_agreement <= kTolExact);
    CHECK(bf.theta_star_relation <= kTolLinalg);
}

TEST_CASE("transformed identity over the spec suites") {
    struct Case {
        const char *a, *b, *alpha;
    };
    for (const Case& c : {Case{"2+x1^2", "1", "1+0.5*x2"}, Case{"2", "1", "exp(x3)"}}) {
        const ConformalData data{field_of(c.a, c.b), parse(c.alpha)};
        SampleRng rng(42);
        for (int n = 0; n < 100; ++n) {
            const BarredFrame bf = barred_frame_at(data, rng.point({0.1, 2.0}));
            CHECK(check_barred_F_identity(bf) <= kTolJet);
            CHECK(bf.gamma_shift_agreement <= kTolJet);
            CHECK(bf.lee_agreement <= kTolJet);
            CHECK(bf.theta_star_relation <= kTolLinalg);
        }
    }
}

TEST_CASE("random base and factor: formulas vs recomputation") {
    SampleRng rng(9);
    for (int n = 0; n < 50; ++n) {
        const MetricField base = random_field(rng);
        // positive factor bounded away from zero
        const Expr alpha =
            expr_add(expr_num(rng.uniform(0.5, 1.5)),
                     expr_mul(expr_num(rng.uniform(0.05, 0.3)),
                              expr_pow(expr_var(rng.integer(0, 2)), 2)));
        const ConformalData data{base, alpha};
        const BarredFrame bf = barred_frame_at(data, rng.point({0.1, 2.0}));
        CHECK(bf.gamma_shift_agreement <= kTolJet);
        CHECK(bf.lee_agreement <= kTolJet);
    }
}

TEST_CASE("flat-base corollary: constant alpha") {
    const ConformalData data{field_of("2", "1"), parse("5")};
    const CorollaryPointCheck cc = check_corollary_at(data, {0.7, 0.3, 1.4});
    CHECK(cc.max_F_bar <= kTolExact);
    CHECK(cc.half_formula_agreement <= kTolExact);
}

TEST_CASE("flat-base corollary: exponential factor at the origin") {
    const ConformalData data{field_of("2", "1"), parse("exp(x1)")};
    const CorollaryPointCheck cc = check_corollary_at(data, {0.0, 0.0, 0.0});
    CHECK(cc.max_F_bar > 1e-6);
    CHECK(cc.half_formula_agreement <= kTolJet);
    // alpha(0) = 1: the verbatim rescaled-metric reading coincides here
    CHECK(cc.literal_form_deviation <= kTolJet);
    // frozen value: F-bar_112 = (1/2)(g_12 (Phi da)_1 + g_11 (Phi da)_2
    //                            - gt_12 da_1 - gt_11 da_2) = (1/2)(0+2-3-0)
    const BarredFrame bf = barred_frame_at(data, {0.0, 0.0, 0.0});
    CHECK(bf.frame.F(0, 0, 1) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("flat-base corollary: pointwise vanishing follows grad alpha") {
    const ConformalData data{field_of("3", "1"), parse("1+x2^2")};
    const CorollaryPointCheck at_zero = check_corollary_at(data, {0.0, 0.0, 0.0});
    CHECK(max_abs(at_zero.alpha_grad) == 0.0);
    CHECK(at_zero.max_F_bar <= kTolExact);
    const CorollaryPointCheck at_one = check_corollary_at(data, {0.0, 1.0, 0.0});
    CHECK(max_abs(at_one.alpha_grad) > 1e-6);
    CHECK(at_one.max_F_bar > 1e-6);
    CHECK(at_one.half_formula_agreement <= kTolJet);
    // alpha = 2 here, so the verbatim rescaled-metric reading is off by
    // a factor of two
    CHECK(at_one.literal_form_deviation > 1e-6);
}

TEST_CASE("corollary precondition requires a flat base") {
    const ConformalData data{field_of("2+x1^2", "1"), parse("exp(x1)")};
    CHECK_THROWS_AS(check_corollary_at(data, {0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("composition: alpha then beta equals alpha*beta") {
    SampleRng rng(13);
    const Expr alpha = parse("1+0.5*x2");
    const Expr beta = parse("exp(0.3*x1)");
    const MetricField base = field_of("2+x1^2", "1");
    const ConformalData first{base, alpha};
    const ConformalData composed{base, expr_mul(alpha, beta)};
    for (int n = 0; n < 50; ++n) {
        const Vec3 p = rng.point({0.1, 2.0});
        // conformal by beta applied to the alpha-rescaled field
        const ConformalData second{barred_field(first), beta};
        const BarredFrame two_step = barred_frame_at(second, p);
        const BarredFrame one_step = barred_frame_at(composed, p);
        CHECK(max_abs_diff(two_step.frame.g, one_step.frame.g) <= kTolLinalg);
        double d = 0.0;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    d = std::max(d, std::abs(two_step.frame.gamma(k, i, j) -
                                             one_step.frame.gamma(k, i, j)));
        CHECK(d <= kTolJet);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(two_step.frame.theta[i] - one_step.frame.theta[i]) <= kTolJet);
    }
}

TEST_CASE("positive definiteness is preserved") {
    SampleRng rng(17);
    const ConformalData data{field_of("2+x1^2", "1+0.1*x2"), parse("exp(x3)")};
    for (int n = 0; n < 20; ++n) {
        const BarredFrame bf = barred_frame_at(data, rng.point({0.1, 2.0}));
        CHECK_NOTHROW(cholesky3(bf.frame.g));
    }
}

TEST_CASE("non-positive alpha is rejected") {
    const ConformalData data{field_of("2", "1"), parse("x1 - 1")};
    CHECK_THROWS_AS(barred_frame_at(data, {0.5, 0.5, 0.5}), std::domain_error);
}
