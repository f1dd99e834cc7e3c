#pragma once

// Curvature of both metrics of the pair, from one engine.
//
// Conventions (pinned by the left-invariant closed forms, which are the
// convention-bearing ground truth):
//   R^l_kij  = d_i Gamma^l_jk - d_j Gamma^l_ik
//              + Gamma^l_is Gamma^s_jk - Gamma^l_js Gamma^s_ik
//   R_ijkl   = R^s_kij g_sl
//   rho_ab   = g^{ij} R_iabj,   tau = g^{ij} rho_ij
//
// The engine takes the metric entries as second-order jets; Christoffel
// symbols are assembled in Dual3 arithmetic so their first derivatives come
// out exactly (no finite differences anywhere).

#include "circ3/manifold.hpp"

namespace circ3 {

struct MetricJets {
    Jet2 e[3][3];  // symmetric
};

MetricJets metric_jets_g(const Jet2& A, const Jet2& B);
MetricJets metric_jets_gt(const Jet2& A, const Jet2& B);

struct CurvatureSide {
    Rank3 gamma;   // Gamma^k_ij values
    Rank4 dgamma;  // dgamma(m,k,i,j) = d_m Gamma^k_ij
    Rank4 R;       // lowered with this side's metric
    Mat3 rho;
    double tau = 0.0;
};

CurvatureSide curvature_of(const MetricJets& m);

struct CurvatureFrame {
    Rank4 R;
    Mat3 rho;
    double tau = 0.0;
    double tau_star = 0.0;        // gt^{ij} rho_ij
    Rank3 tilde_gamma;
    Rank4 R_tilde;
    Mat3 rho_tilde;
    double tau_tilde = 0.0;
    double tau_tilde_star = 0.0;  // g^{ij} rho~_ij
    Rank3 T;                      // Gamma~ - Gamma
    double t_closed_agreement = 0.0;
};

CurvatureFrame curvature_from(const PointFrame& frame);
CurvatureFrame curvature_at(const MetricField& field, const Vec3& p);

double riemann_symmetry_residual(const Rank4& R);
double first_bianchi_residual(const Rank4& R);

// Residual of R_ijkl = -(g_ik rho_jl + g_jl rho_ik - g_il rho_jk -
// g_jk rho_il) + (tau/2)(g_ik g_jl - g_il g_jk) (Weyl vanishes in
// dimension 3).
double ricci_decomposition_residual(const Rank4& R, const Mat3& rho, double tau, const Mat3& g);

// Max entry of |rho~ - rho - (1/3)(tau~* - tau) g - (1/6)(2 tau~ - 2 tau* +
// tau~* - tau) g~|.
double check_ricci_relation(const CurvatureFrame& cf, const PointFrame& frame);

// Closed form of the affine deformation tensor via the Lee forms.
Rank3 deformation_closed_form(const PointFrame& frame);

struct EinsteinFit {
    double beta = 0.0;
    double gamma = 0.0;
    double residual = 0.0;
};

struct DegenerateFitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares rho ~ beta g + gamma g~ over the six independent symmetric
// components; throws DegenerateFitError when {g, g~} are (numerically)
// dependent.
EinsteinFit almost_einstein_fit(const Mat3& rho, const Mat3& g, const Mat3& gt);

// Residual of rho = (t1/3) g + ((t1 + 2 t2)/6) g~. For the g-side
// conclusion pass (rho, tau, tau*); for the mirror pass (rho~, tau~*, tau~).
double flat_conclusion_residual(const Mat3& rho, double t1, double t2, const Mat3& g,
                                const Mat3& gt);

struct FlatCorollaryReport {
    bool tilde_flat = false;            // max|R~| <= kTolJet
    double tilde_conclusion = 0.0;      // meaningful only when tilde_flat
    bool g_flat = false;                // max|R| <= kTolJet
    double g_conclusion = 0.0;          // meaningful only when g_flat
};

FlatCorollaryReport check_flat_corollaries(const CurvatureFrame& cf, const PointFrame& frame);

}  // namespace circ3
