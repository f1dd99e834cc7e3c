#pragma once

// Left-invariant instance over exact rational structure constants.
//
// Brackets in the distinguished frame:
//   [x1,x2] = l1 x1 + l2 x2 + l3 x3
//   [x2,x3] = n1 x1 + n2 x2 + n3 x3
//   [x1,x3] = m1 x1 + m2 x2 + m3 x3
// with g orthonormal and g~ the zero-diagonal all-ones matrix. Everything
// here is exact: inputs rational implies every connection/curvature output
// rational, so the case propositions verify with equality, not tolerance.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circ3/diagnostics.hpp"

namespace circ3::lie {

using Rat = mpq_class;
using RVec3 = std::array<Rat, 3>;
using RMat3 = std::array<std::array<Rat, 3>, 3>;
using RRank3 = std::array<std::array<std::array<Rat, 3>, 3>, 3>;
using RRank4 = std::array<std::array<std::array<std::array<Rat, 3>, 3>, 3>, 3>;

Rat rat_parse(const std::string& text);  // "p/q" or integer
std::string rat_str(const Rat& r);

struct LieAlgebraSpec {
    RVec3 lambda{}, mu{}, nu{};
};

struct ReducedSpec {
    RVec3 lambda{}, nu{};
};

// mu1 = nu2 + l3, mu2 = nu3 + l1, mu3 = nu1 + l2.
LieAlgebraSpec reconstruct(const ReducedSpec& r);

// The three Jacobi polynomials, ordered and signed so that substituting the
// reconstructed mu reproduces reduced_jacobi_residual componentwise.
RVec3 jacobi_residual(const LieAlgebraSpec& s);

// mu - (nu2+l3, nu3+l1, nu1+l2); zero iff the spec carries the structure
// compatible with the fundamental-tensor identity.
RVec3 mu_constraint_residual(const LieAlgebraSpec& s);

RVec3 reduced_jacobi_residual(const ReducedSpec& r);

bool is_zero(const RVec3& v);

struct JacobiError : std::runtime_error {
    RVec3 residual;
    explicit JacobiError(const RVec3& r)
        : std::runtime_error("structure constants violate the Jacobi identity"), residual(r) {}
};

// C[i][j][k]: coefficient of x_k in [x_i, x_j].
struct Brackets {
    Rat c[3][3][3];
};
Brackets brackets(const LieAlgebraSpec& s);

// nabla_{x_i} x_j = sum_k c[i][j][k] x_k, from the Koszul formula with
// orthonormal g. Throws JacobiError for invalid algebras.
struct Connection {
    Rat c[3][3][3];
};
Connection koszul_connection(const LieAlgebraSpec& s);

// Exact max-norm residuals of the connection's defining properties.
Rat torsion_residual(const Connection& c, const Brackets& b);
Rat metric_compatibility_residual(const Connection& c);

struct LieFrame {
    RRank3 F{};        // F[i][j][k], first index is the differentiation slot
    RVec3 theta{}, theta_star{};
};
LieFrame lie_fundamental(const LieAlgebraSpec& s);

// Residual of F_kij = (1/3)(g_kj th_i + g_ki th_j + gt_kj th*_i + gt_ki
// th*_j) with g = I and gt = ones - I, exact.
Rat lie_f_identity_residual(const LieFrame& f);

struct LieCurvature {
    RRank4 R{};       // lowered with the orthonormal metric
    RMat3 rho{};
    Rat tau{}, tau_star{};
    RVec3 k{};        // sectional curvatures (k23, k13, k12)
};
LieCurvature lie_curvature(const LieAlgebraSpec& s);

// Exact residuals of the two printed invariance polynomials; (0,0) iff the
// three basis-plane curvature components coincide.
std::array<Rat, 2> invariance_residual(const ReducedSpec& r);

enum class CaseFamily { A, B, C };

// Case A takes (l1, l2, n2); B and C take (l1, l2) and ignore params[2].
ReducedSpec case_spec(CaseFamily family, const RVec3& params);

// ---------------------------------------------------------------------------
// Printed closed-form tables (regression targets; the derivational values
// above are ground truth).

// 18-entry F table and Lee-form tables in (lambda, mu, nu) form.
RRank3 printed_f_table(const LieAlgebraSpec& s);
RVec3 printed_theta_table(const LieAlgebraSpec& s);
RVec3 printed_theta_star_table(const LieAlgebraSpec& s);

struct RTableEntry {
    int i, j, k, l;  // 0-based component indices
    Rat printed;
};
// Six printed curvature components in (lambda, nu) form (valid algebras).
std::array<RTableEntry, 6> printed_r_table(const ReducedSpec& r);

// Derivational-vs-printed mismatches, exact comparison.
std::vector<TableDiff> compare_section5_tables(const LieAlgebraSpec& s);
std::vector<TableDiff> compare_r_table(const ReducedSpec& r);

// ---------------------------------------------------------------------------

struct ClauseResult {
    std::string name;
    bool pass = false;
    bool regression = false;  // printed-table comparison, logged not gating
    std::string detail;
};

struct PropositionReport {
    CaseFamily family;
    RVec3 params{};
    std::vector<ClauseResult> clauses;
    std::vector<TableDiff> discrepancies;
    bool pass = false;  // every non-regression clause passes
    Rat tau{}, k{};     // headline values
};

PropositionReport verify_case_propositions(CaseFamily family, const RVec3& params);

}  // namespace circ3::lie
