#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circ3/liegroup.hpp"
#include "circ3/sampling.hpp"

using namespace circ3;
using namespace circ3::lie;

namespace {

Rat rr(long n, long d = 1) { return Rat(n, d); }

Rat random_rat(SampleRng& rng) { return Rat(rng.integer(-9, 9), rng.integer(1, 9)); }

LieAlgebraSpec random_spec(SampleRng& rng) {
    LieAlgebraSpec s;
    for (int i = 0; i < 3; ++i) {
        s.lambda[i] = random_rat(rng);
        s.mu[i] = random_rat(rng);
        s.nu[i] = random_rat(rng);
    }
    return s;
}

ReducedSpec random_reduced(SampleRng& rng) {
    ReducedSpec r;
    for (int i = 0; i < 3; ++i) {
        r.lambda[i] = random_rat(rng);
        r.nu[i] = random_rat(rng);
    }
    return r;
}

// Random Jacobi-valid reduced specs come from the rationally parameterized
// families: the three case families plus the non-invariant family
// lambda = (t,0,0), nu = (0,0,t).
ReducedSpec random_valid(SampleRng& rng) {
    switch (rng.integer(0, 3)) {
        case 0:
            return case_spec(CaseFamily::A, {random_rat(rng), random_rat(rng), random_rat(rng)});
        case 1: return case_spec(CaseFamily::B, {random_rat(rng), random_rat(rng), 0});
        case 2: return case_spec(CaseFamily::C, {random_rat(rng), random_rat(rng), 0});
        default: {
            const Rat t = random_rat(rng);
            return {{t, 0, 0}, {0, 0, t}};
        }
    }
}

// The printed nine-line connection display.
void printed_koszul(const LieAlgebraSpec& s, Rat expected[3][3][3]) {
    const Rat &l1 = s.lambda[0], &l2 = s.lambda[1], &l3 = s.lambda[2];
    const Rat &m1 = s.mu[0], &m2 = s.mu[1], &m3 = s.mu[2];
    const Rat &n1 = s.nu[0], &n2 = s.nu[1], &n3 = s.nu[2];
    auto set = [&expected](int i, int j, Rat a, Rat b, Rat c) {
        expected[i][j][0] = a;
        expected[i][j][1] = b;
        expected[i][j][2] = c;
    };
    set(0, 0, 0, -l1, -m1);
    set(0, 1, l1, 0, (l3 - m2 - n1) / 2);
    set(0, 2, m1, (m2 - l3 + n1) / 2, 0);
    set(1, 0, 0, -l2, -(l3 + n1 + m2) / 2);
    set(1, 1, l2, 0, -n2);
    set(1, 2, (n1 + m2 + l3) / 2, n2, 0);
    set(2, 0, 0, (n1 - m2 - l3) / 2, -m3);
    set(2, 1, (-n1 + m2 + l3) / 2, 0, -n3);
    set(2, 2, m3, n3, 0);
}

}  // namespace

TEST_CASE("jacobi residual: abelian and reconstructed case data vanish") {
    CHECK(is_zero(jacobi_residual(LieAlgebraSpec{})));
    const ReducedSpec a = case_spec(CaseFamily::A, {rr(1), rr(2), rr(3)});
    CHECK(is_zero(jacobi_residual(reconstruct(a))));
    CHECK(is_zero(reduced_jacobi_residual(a)));
}

TEST_CASE("single-generator spec: valid algebra, inadmissible structure") {
    LieAlgebraSpec s{};
    s.lambda[0] = 1;  // [x1,x2] = x1, everything else zero
    CHECK(is_zero(jacobi_residual(s)));
    const RVec3 mu = mu_constraint_residual(s);
    CHECK(mu[0] == 0);
    CHECK(mu[1] == rr(-1));
    CHECK(mu[2] == 0);
    // the reduced system on the same (lambda, nu) data shows the
    // (0, 0, -lambda1^2) pattern
    const ReducedSpec red{{rr(1), 0, 0}, {0, 0, 0}};
    const RVec3 r = reduced_jacobi_residual(red);
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
    CHECK(r[2] == rr(-1));
}

TEST_CASE("an invalid spec is detected and refused a connection") {
    LieAlgebraSpec s{};
    s.lambda[0] = 1;
    s.nu[1] = 1;  // [x1,x2] = x1, [x2,x3] = x2
    const RVec3 j = jacobi_residual(s);
    CHECK(!is_zero(j));
    CHECK(j[0] == rr(-1));
    CHECK_THROWS_AS(koszul_connection(s), JacobiError);
}

TEST_CASE("reduced residual equals full residual after reconstruction, exactly") {
    SampleRng rng(101);
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_reduced(rng);
        const RVec3 a = reduced_jacobi_residual(r);
        const RVec3 b = jacobi_residual(reconstruct(r));
        CHECK(a[0] == b[0]);
        CHECK(a[1] == b[1]);
        CHECK(a[2] == b[2]);
    }
}

TEST_CASE("koszul connection: frozen single-generator values") {
    LieAlgebraSpec s{};
    s.lambda[0] = 1;
    const Connection c = koszul_connection(s);
    // nabla_1 x1 = -x2, nabla_1 x2 = x1
    CHECK(c.c[0][0][0] == 0);
    CHECK(c.c[0][0][1] == rr(-1));
    CHECK(c.c[0][0][2] == 0);
    CHECK(c.c[0][1][0] == rr(1));
    CHECK(c.c[0][1][1] == 0);
    CHECK(c.c[0][1][2] == 0);
    // abelian: everything vanishes
    const Connection z = koszul_connection(LieAlgebraSpec{});
    Rat worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) worst += abs(z.c[i][j][k]);
    CHECK(worst == 0);
}

TEST_CASE("koszul connection matches the printed display exactly") {
    SampleRng rng(103);
    for (int n = 0; n < 100; ++n) {
        const LieAlgebraSpec s = reconstruct(random_valid(rng));
        const Connection c = koszul_connection(s);
        Rat expected[3][3][3];
        printed_koszul(s, expected);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) CHECK(c.c[i][j][k] == expected[i][j][k]);
    }
}

TEST_CASE("torsion-freeness and metric compatibility, exactly") {
    SampleRng rng(105);
    for (int n = 0; n < 100; ++n) {
        const LieAlgebraSpec s = reconstruct(random_valid(rng));
        const Connection c = koszul_connection(s);
        CHECK(torsion_residual(c, brackets(s)) == 0);
        CHECK(metric_compatibility_residual(c) == 0);
    }
}

TEST_CASE("fundamental tensor on the invariant frame") {
    // abelian: everything zero
    const LieFrame z = lie_fundamental(LieAlgebraSpec{});
    CHECK(z.theta == RVec3{0, 0, 0});
    CHECK(z.theta_star == RVec3{0, 0, 0});
    SampleRng rng(107);
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_reduced(rng);
        const LieAlgebraSpec s = reconstruct(r);
        // connection needs no Jacobi for these algebraic identities, but
        // lie_fundamental guards on it; restrict to valid specs
        (void)s;
    }
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_valid(rng);
        const LieAlgebraSpec s = reconstruct(r);
        const LieFrame f = lie_fundamental(s);
        // mu-eliminated closed forms of the first diagonal entries
        const Rat &l1 = r.lambda[0], &l2 = r.lambda[1], &l3 = r.lambda[2];
        const Rat &n1 = r.nu[0], &n2 = r.nu[1], &n3 = r.nu[2];
        CHECK(f.F[0][0][0] == 2 * l1 + 2 * l3 + 2 * n2);
        CHECK(f.F[1][0][0] == l1 + 2 * l2 + l3 + n1 + n3);
        CHECK(f.F[1][1][1] == -2 * l2 + 2 * n2);
        CHECK(f.F[2][2][2] == -2 * (n1 + l2) - 2 * n3);
        CHECK(f.theta[0] == 3 * (l1 + l3 + n2));
        CHECK(f.theta[1] == 3 * (n2 - l2));
        CHECK(f.theta[2] == -3 * (l2 + n1 + n3));
        CHECK(f.theta_star[0] == 3 * (l1 + 2 * l2 + l3 + n1 + n3) / 2);
        CHECK(f.theta_star[1] == -3 * (l1 + l3 - n1 - n3) / 2);
        CHECK(f.theta_star[2] == -3 * (l1 + l3 + n1 + 2 * n2 + n3) / 2);
        // the class identity holds exactly on admissible specs
        CHECK(lie_f_identity_residual(f) == 0);
    }
}

TEST_CASE("printed tables: only the known F_313 entry mismatches") {
    SampleRng rng(109);
    int mismatching_specs = 0;
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_valid(rng);
        const LieAlgebraSpec s = reconstruct(r);
        const auto diffs = compare_section5_tables(s);
        for (const TableDiff& d : diffs) {
            CHECK(d.component == "F_313");
            // derivational - printed = (l3 - l1)/2
            const Rat gap = rat_parse(d.derivational) - rat_parse(d.printed);
            CHECK(gap == (r.lambda[2] - r.lambda[0]) / 2);
        }
        if (!diffs.empty()) ++mismatching_specs;
        CHECK(diffs.size() <= 1);
    }
    CHECK(mismatching_specs > 50);  // generic specs have l1 != l3
}

TEST_CASE("printed curvature table matches derivationally on valid specs") {
    SampleRng rng(111);
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_valid(rng);
        CHECK(compare_r_table(r).empty());
    }
}

TEST_CASE("R_1332 printed form differs from derivational by the Jacobi polynomial") {
    SampleRng rng(113);
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_reduced(rng);
        const LieCurvature c = lie_curvature(reconstruct(r));
        const auto table = printed_r_table(r);
        // entries 0..4 are identities on all mu-constrained specs
        for (int t = 0; t < 5; ++t) {
            const auto& e = table[t];
            CHECK(c.R[e.i][e.j][e.k][e.l] == e.printed);
        }
        const auto& e = table[5];  // R_1332
        const RVec3 jac = reduced_jacobi_residual(r);
        CHECK(c.R[e.i][e.j][e.k][e.l] - e.printed == jac[1]);
    }
}

TEST_CASE("lie curvature: abelian and the first case family") {
    const LieCurvature z = lie_curvature(LieAlgebraSpec{});
    CHECK(z.tau == 0);
    CHECK(z.k == RVec3{0, 0, 0});

    const LieCurvature a = lie_curvature(reconstruct(case_spec(CaseFamily::A, {1, 0, 0})));
    CHECK(a.R[0][1][0][1] == 1);
    CHECK(a.R[0][2][0][2] == 1);
    CHECK(a.R[1][2][1][2] == 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a.rho[i][j] == (i == j ? rr(-2) : rr(0)));
    CHECK(a.tau == rr(-6));
    CHECK(a.k == RVec3{1, 1, 1});

    const LieCurvature b = lie_curvature(reconstruct(case_spec(CaseFamily::B, {1, 0, 0})));
    CHECK(b.tau == rr(-9, 2));
    CHECK(b.k == RVec3{rr(3, 4), rr(3, 4), rr(3, 4)});
}

TEST_CASE("invariance residual examples and exact biconditional") {
    CHECK(invariance_residual(case_spec(CaseFamily::A, {1, 0, 0})) == std::array<Rat, 2>{0, 0});
    CHECK(invariance_residual(case_spec(CaseFamily::C, {1, 1, 0})) == std::array<Rat, 2>{0, 0});
    {
        const ReducedSpec r{{rr(1), 0, rr(1)}, {0, 0, 0}};
        const auto inv = invariance_residual(r);
        CHECK(inv[0] == rr(3));
        const LieCurvature c = lie_curvature(reconstruct(r));
        CHECK((c.R[0][1][0][1] != c.R[0][2][0][2] || c.R[0][2][0][2] != c.R[1][2][1][2]));
    }
    SampleRng rng(115);
    for (int n = 0; n < 100; ++n) {
        const ReducedSpec r = random_reduced(rng);
        const auto inv = invariance_residual(r);
        const LieCurvature c = lie_curvature(reconstruct(r));
        // the printed system is exactly the pair of plane differences
        CHECK(inv[0] == c.R[0][2][0][2] - c.R[1][2][1][2]);
        CHECK(inv[1] == c.R[0][2][0][2] - c.R[0][1][0][1]);
        const bool sys_zero = inv[0] == 0 && inv[1] == 0;
        const bool planes_equal =
            c.R[0][1][0][1] == c.R[0][2][0][2] && c.R[0][2][0][2] == c.R[1][2][1][2];
        CHECK(sys_zero == planes_equal);
    }
}

TEST_CASE("case constructors produce the advertised specs") {
    const ReducedSpec a = case_spec(CaseFamily::A, {1, 0, 0});
    CHECK(a.lambda == RVec3{1, 0, 0});
    CHECK(a.nu == RVec3{0, 0, -1});

    const ReducedSpec b = case_spec(CaseFamily::B, {1, 0, 0});
    CHECK(b.lambda == RVec3{1, 0, -1});
    CHECK(b.nu == RVec3{-1, 1, 0});
    CHECK(is_zero(reduced_jacobi_residual(b)));
    CHECK(invariance_residual(b) == std::array<Rat, 2>{0, 0});

    const ReducedSpec c = case_spec(CaseFamily::C, {1, 1, 0});
    CHECK(c.lambda == RVec3{1, 1, -2});
    CHECK(c.nu == RVec3{1, 1, -2});
    const Brackets br = brackets(reconstruct(c));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(br.c[(i + 1) % 3][(j + 1) % 3][k] == br.c[i][j][k]);
}

TEST_CASE("case propositions: headline rational values") {
    {
        const PropositionReport rep = verify_case_propositions(CaseFamily::A, {1, 1, 1});
        CHECK(rep.pass);
        CHECK(rep.k == rr(3));
        CHECK(rep.tau == rr(-18));
    }
    {
        const PropositionReport rep = verify_case_propositions(CaseFamily::B, {2, 0, 0});
        CHECK(rep.pass);
        CHECK(rep.k == rr(3));
        CHECK(rep.tau == rr(-18));
    }
    {
        const PropositionReport rep = verify_case_propositions(CaseFamily::C, {1, 0, 0});
        CHECK(rep.pass);
        CHECK(rep.k == rr(2));
        CHECK(rep.tau == rr(-12));
        // the printed all-entries rho is a regression clause; derivational
        // off-diagonals are +2k', logged as discrepancies
        bool found_regression = false;
        for (const ClauseResult& c : rep.clauses)
            if (c.name == "rho-printed-table") {
                CHECK(c.regression);
                CHECK(!c.pass);
                found_regression = true;
            }
        CHECK(found_regression);
        CHECK(rep.discrepancies.size() == 6);
        CHECK(rep.discrepancies[0].derivational == "2");
        CHECK(rep.discrepancies[0].printed == "-4");
    }
}

TEST_CASE("case propositions hold for random rational parameters") {
    SampleRng rng(117);
    for (int n = 0; n < 20; ++n) {
        const RVec3 p = {random_rat(rng), random_rat(rng), random_rat(rng)};
        for (CaseFamily fam : {CaseFamily::A, CaseFamily::B, CaseFamily::C}) {
            const PropositionReport rep = verify_case_propositions(fam, p);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("rational parsing round-trips") {
    CHECK(rat_parse("3/4") == rr(3, 4));
    CHECK(rat_parse("-6/8") == rr(-3, 4));
    CHECK(rat_parse("7") == rr(7));
    CHECK(rat_str(rr(-3, 4)) == "-3/4");
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
}
