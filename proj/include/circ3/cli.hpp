#pragma once

// Command-line front end. The suite runners are exposed so the test and
// acceptance binaries can drive them directly; the CLI is a thin parser on
// top.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 field-guard violation or expression domain error.

#include <iosfwd>
#include <optional>

#include "circ3/conformal.hpp"
#include "circ3/curvature.hpp"
#include "circ3/report.hpp"
#include "circ3/sampling.hpp"
#include "circ3/scanner.hpp"

namespace circ3 {

struct SuiteOptions {
    int points = 100;
    std::uint64_t seed = 42;
    SampleBox box{};
    std::optional<double> tol;  // overrides every check tolerance when set

    double resolve(double default_tol) const { return tol ? *tol : default_tol; }
};

// Samples a point where the field guards hold; resamples up to 100 times,
// then rethrows the last GuardError.
Vec3 sample_valid_point(const MetricField& field, SampleRng& rng, const SampleBox& box);

Report run_manifold_check(const MetricField& field, const SuiteOptions& opt);
Report run_manifold_curvature(const MetricField& field, const Vec3& point,
                              const SuiteOptions& opt);
Report run_conformal_check(const ConformalData& data, const SuiteOptions& opt);
Report run_lie_check(const lie::LieAlgebraSpec& spec);
Report run_lie_case(lie::CaseFamily family, const lie::RVec3& params);
Report run_lie_scan(const lie::ScanParams& params);
Report run_selftest();

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circ3
