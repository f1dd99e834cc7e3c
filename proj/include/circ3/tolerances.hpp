#pragma once

// Tolerance ladder, one place instead of ad-hoc epsilons:
//   kTolExact  — exact-arithmetic-representable cases
//   kTolLinalg — pure linear algebra
//   kTolJet    — anything involving jets of transcendental expressions
//   kTolCurv   — relations compounding two Hessian-bearing pipelines

namespace circ3 {

inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolLinalg = 1e-10;
inline constexpr double kTolJet = 1e-9;
inline constexpr double kTolCurv = 1e-8;

// D = (A-B)(A+2B) guard floor; below this the metric pair is treated as
// degenerate.
inline constexpr double kMinD = 1e-10;

}  // namespace circ3
