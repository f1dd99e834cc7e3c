#pragma once

// Numerical exploration of the 5-polynomial system (three reduced Jacobi
// equations + two curvature-invariance equations) over the six constants
// (l1,l2,l3,n1,n2,n3). Multi-start Levenberg-Marquardt; the system is
// homogeneous of degree 2, so solutions come in rays and are reported
// scale-normalized with the largest-magnitude entry at +1. Candidates that
// rationalize with small denominators are re-verified in exact arithmetic.

#include <cstdint>

#include "circ3/liegroup.hpp"

namespace circ3::lie {

struct ScanParams {
    std::uint64_t seed = 1;
    int trials = 1000;
    double threshold = 1e-10;
};

struct ScanSolution {
    std::array<double, 6> x{};  // l1,l2,l3,n1,n2,n3, normalized
    double residual = 0.0;      // max-norm of the 5 residuals at x
    std::string family;         // "A", "B", "C", comma-joined, or "outside known cases"
    bool exact = false;         // rационalized and re-verified exactly
    std::optional<ReducedSpec> rationalized;
};

std::array<double, 5> scan_residual(const std::array<double, 6>& x);

// One damped-Newton run from the given start; empty when it does not reach
// the threshold.
std::optional<ScanSolution> scan_from(const std::array<double, 6>& start, double threshold);

std::vector<ScanSolution> scan_invariance_variety(const ScanParams& params);

}  // namespace circ3::lie
