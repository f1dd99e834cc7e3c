#pragma once

// Pointwise geometry of the metric pair (g, g~) generated by two scalar
// fields A > B > 0:
//
//   g  = circulant(A, B, B)          g~ = circulant(2B, A+B, A+B)
//
// Every quantity is computed twice where a closed form exists: the
// derivational route (generic Christoffel / covariant derivative with exact
// jets) is ground truth, the closed forms are regression targets, and the
// frame records their agreement.

#include <vector>

#include "circ3/diagnostics.hpp"
#include "circ3/expr.hpp"
#include "circ3/tensor.hpp"
#include "circ3/tolerances.hpp"

namespace circ3 {

struct MetricField {
    Expr A, B;
};

struct GuardError : std::runtime_error {
    Vec3 p;
    double A, B, D;
    GuardError(const Vec3& pt, double a, double b, double d, const std::string& what)
        : std::runtime_error(what), p(pt), A(a), B(b), D(d) {}
};

// Residuals of the internal cross-checks performed while assembling a frame.
struct FrameChecks {
    double ginv_agreement = 0.0;        // closed-form inverse vs adjugate inverse
    double gtinv_agreement = 0.0;
    double gamma_agreement = 0.0;       // four-case closed form vs generic formula
    double f_table = 0.0;               // component table vs derivational F
    double f_symmetry = 0.0;            // F[k][i][j] vs F[k][j][i]
    double theta_closed = 0.0;          // closed form vs contraction
    double theta_star_closed = 0.0;
    double theta_star_relation = 0.0;   // theta* + (1/2) S theta
    double metricity = 0.0;             // nabla g = 0
};

struct PointFrame {
    Vec3 p{};
    Jet2 A, B;
    double D = 0.0;
    Mat3 g, g_inv, g_tilde, g_tilde_inv;
    Rank3 gamma;         // derivational (generic formula)
    Rank3 gamma_closed;  // four-case closed form
    Rank3 F;             // derivational (covariant derivative of g~)
    Vec3 theta{}, theta_star{};  // contraction definitions
    FrameChecks checks;
};

// Throws GuardError when A <= B, B <= 0 or D <= kMinD at p; propagates
// EvalError from expression evaluation.
PointFrame frame_at(const MetricField& field, const Vec3& p);

// The defining covariant-derivative formula, recomputed from the frame.
Rank3 fundamental_tensor(const PointFrame& frame);

struct LeeForms {
    Vec3 theta{}, theta_star{};
};
LeeForms lee_forms(const PointFrame& frame);

// Max over all 27 components of |F_kij - (1/3)(g_kj th_i + g_ki th_j +
// gt_kj th*_i + gt_ki th*_j)|.
double check_F_identity(const PointFrame& frame);

// Max residual of the four raise/lower relations between theta, theta* and
// the associated metric.
double check_tilde_g_identities(const PointFrame& frame);

// Closed forms printed for this metric pair (regression targets).
Mat3 ginv_closed(double A, double B);
Mat3 gtinv_closed(double A, double B);
Rank3 gamma_closed_form(const Jet2& A, const Jet2& B);
Rank3 f_component_table(const Jet2& A, const Jet2& B);
Vec3 theta_closed_form(const Jet2& A, const Jet2& B);
Vec3 theta_star_closed_form(const Jet2& A, const Jet2& B);

// Entry-level mismatches (above kTolJet) between the derivational frame
// quantities and the printed tables.
std::vector<TableDiff> compare_frame_tables(const PointFrame& frame);

}  // namespace circ3
