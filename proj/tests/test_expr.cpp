#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace circ3;
using namespace circ3::testing;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("parse produces the expected tree shapes") {
    {
        const Expr e = parse("2 + x1^2");
        const ExprNode* n = e.get();
        REQUIRE(n->op == Op::Add);
        CHECK(n->a->op == Op::Num);
        CHECK(n->a->num == 2.0);
        REQUIRE(n->b->op == Op::Pow);
        CHECK(n->b->ipow == 2);
        CHECK(n->b->a->op == Op::Var);
        CHECK(n->b->a->var == 0);
    }
    {
        const Expr e = parse("sin(x2)*x3");
        const ExprNode* n = e.get();
        REQUIRE(n->op == Op::Mul);
        CHECK(n->a->op == Op::Sin);
        CHECK(n->a->a->op == Op::Var);
        CHECK(n->a->a->var == 1);
        CHECK(n->b->op == Op::Var);
        CHECK(n->b->var == 2);
    }
}

TEST_CASE("whitespace insensitivity and determinism") {
    CHECK(structurally_equal(parse("1+x1 * x2"), parse("  1 + x1*x2 ")));
    CHECK(structurally_equal(parse("sin(x1)"), parse("sin( x1 )")));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_WITH_AS(parse("x4 + 1"), doctest::Contains("unknown identifier 'x4'"),
                         ParseError);
    try {
        parse("x4 + 1");
    } catch (const ParseError& e) {
        CHECK(e.pos == 0);
    }
    CHECK_THROWS_AS(parse("foo(x1)"), ParseError);
    CHECK_THROWS_AS(parse("1 + "), ParseError);
    CHECK_THROWS_AS(parse("(x1"), ParseError);
    CHECK_THROWS_AS(parse("1.2e"), ParseError);
    CHECK_THROWS_AS(parse("x1^2.5"), ParseError);
    CHECK_THROWS_AS(parse("x1 x2"), ParseError);
}

TEST_CASE("round-trip: print then reparse is structurally identical") {
    SampleRng rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Expr e = random_expr(rng, rng.integer(2, 5));
        const std::string text = to_string(e);
        CAPTURE(text);
        const Expr back = parse(text);
        CHECK(structurally_equal(e, back));
    }
    // unary minus vs power binding
    const Expr neg_pow = expr_neg(expr_pow(expr_var(0), 2));
    CHECK(structurally_equal(neg_pow, parse(to_string(neg_pow))));
    const Expr pow_neg = expr_pow(expr_neg(expr_var(0)), 2);
    CHECK(structurally_equal(pow_neg, parse(to_string(pow_neg))));
    CHECK(!structurally_equal(neg_pow, pow_neg));
}

TEST_CASE("bilinear jet example x1*x2") {
    const Jet2 j = eval_jet2(parse("x1*x2"), {2.0, 3.0, 5.0});
    CHECK(j.v == 6.0);
    CHECK(j.g[0] == 3.0);
    CHECK(j.g[1] == 2.0);
    CHECK(j.g[2] == 0.0);
    CHECK(j.h(0, 1) == 1.0);
    CHECK(j.h(1, 0) == 1.0);
    CHECK(j.h(0, 0) == 0.0);
    CHECK(j.h(2, 2) == 0.0);
}

TEST_CASE("monomial jet example x1^2") {
    const Jet2 j = eval_jet2(parse("x1^2"), {1.0, 0.0, 0.0});
    CHECK(j.v == 1.0);
    CHECK(j.g[0] == 2.0);
    CHECK(j.g[1] == 0.0);
    CHECK(j.h(0, 0) == 2.0);
}

TEST_CASE("exp(x1)*sin(x3) matches central finite differences") {
    const Expr e = parse("exp(x1)*sin(x3)");
    const Vec3 p = {0.3, 0.1, 0.7};
    const Jet2 j = eval_jet2(e, p);
    const Vec3 g = fd_gradient(e, p, 1e-4);
    const Mat3 h = fd_hessian(e, p, 1e-4);
    for (int i = 0; i < 3; ++i) {
        CHECK(near(j.g[i], g[i], 1e-5 * std::max(1.0, std::abs(g[i]))));
        for (int k = 0; k < 3; ++k)
            CHECK(near(j.h(i, k), h(i, k), 1e-5 * std::max(1.0, std::abs(h(i, k)))));
    }
}

TEST_CASE("200 random (expr, point) pairs agree with finite differences") {
    SampleRng rng(42);
    for (int n = 0; n < 200; ++n) {
        const auto [e, p] = random_expr_case(rng);
        CAPTURE(to_string(e));
        const Jet2 j = eval_jet2(e, p);
        double scale = 1.0;
        scale = std::max(scale, std::abs(j.v));
        for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(j.g[i]));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) scale = std::max(scale, std::abs(j.h(i, k)));
        const double tol = 1e-5 * scale + 1e-8;
        const Vec3 g = fd_gradient(e, p, 1e-4);
        const Mat3 h = fd_hessian(e, p, 1e-4);
        for (int i = 0; i < 3; ++i) {
            CHECK(near(j.g[i], g[i], tol));
            for (int k = 0; k < 3; ++k) CHECK(near(j.h(i, k), h(i, k), tol));
        }
    }
}

TEST_CASE("product rule holds structurally against a textbook jet product") {
    SampleRng rng(7);
    for (int n = 0; n < 50; ++n) {
        const auto [a, p] = random_expr_case(rng);
        const auto [b, p2] = random_expr_case(rng);
        (void)p2;
        const Jet2 ja = eval_jet2(a, p);
        const Jet2 jb = eval_jet2(b, p);
        const Jet2 prod = eval_jet2(expr_mul(a, b), p);
        // independent textbook formulas; the implementation mirrors the
        // upper triangle, so that is where bit-exact equality is defined
        CHECK(prod.v == ja.v * jb.v);
        for (int i = 0; i < 3; ++i) {
            CHECK(prod.g[i] == ja.v * jb.g[i] + jb.v * ja.g[i]);
            for (int k = i; k < 3; ++k)
                CHECK(prod.h(i, k) == ja.v * jb.h(i, k) + jb.v * ja.h(i, k) +
                                          ja.g[i] * jb.g[k] + ja.g[k] * jb.g[i]);
        }
        const Jet2 sum = eval_jet2(expr_add(a, b), p);
        CHECK(sum.v == ja.v + jb.v);
        for (int i = 0; i < 3; ++i) CHECK(sum.g[i] == ja.g[i] + jb.g[i]);
    }
}

TEST_CASE("hessians are exactly symmetric by construction") {
    SampleRng rng(11);
    for (int n = 0; n < 100; ++n) {
        const auto [e, p] = random_expr_case(rng);
        const Jet2 j = eval_jet2(e, p);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) CHECK(j.h(i, k) == j.h(k, i));
    }
}

TEST_CASE("domain errors identify the offending subexpression") {
    CHECK_THROWS_WITH_AS(eval_jet2(parse("log(x1 - 5)"), {1.0, 0.0, 0.0}),
                         doctest::Contains("log of non-positive"), EvalError);
    CHECK_THROWS_WITH_AS(eval_jet2(parse("1/(x1 - 1)"), {1.0, 0.0, 0.0}),
                         doctest::Contains("division by zero"), EvalError);
    CHECK_THROWS_WITH_AS(eval_jet2(parse("sqrt(-x1)"), {2.0, 0.0, 0.0}),
                         doctest::Contains("sqrt of non-positive"), EvalError);
    CHECK_THROWS_AS(eval_jet2(parse("x1^-1"), {0.0, 0.0, 0.0}), EvalError);
    try {
        eval_jet2(parse("x2 + log(x1 - 5)"), {1.0, 0.0, 0.0});
        CHECK(false);
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("log(x1 - 5)") != std::string::npos);
    }
}

TEST_CASE("integer powers, including negative and zero exponents") {
    const Jet2 a = eval_jet2(parse("x1^0"), {3.0, 0.0, 0.0});
    CHECK(a.v == 1.0);
    CHECK(a.g[0] == 0.0);
    const Jet2 b = eval_jet2(parse("x1^-2"), {2.0, 0.0, 0.0});
    CHECK(b.v == 0.25);
    CHECK(near(b.g[0], -2.0 / 8.0, 1e-15));
    CHECK(near(b.h(0, 0), 6.0 / 16.0, 1e-15));
    // grammar binds the unary minus before the power
    const Jet2 c = eval_jet2(parse("-x1^2"), {3.0, 0.0, 0.0});
    CHECK(c.v == 9.0);
}

TEST_CASE("constants and is_constant") {
    CHECK(parse("1 + 2*3").is_constant());
    CHECK(!parse("1 + x2").is_constant());
    CHECK(parse("sin(1)").is_constant());
}
