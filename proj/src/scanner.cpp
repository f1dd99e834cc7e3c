#include "circ3/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "circ3/sampling.hpp"

namespace circ3::lie {

namespace {

// value + gradient in the six unknowns, for exact Jacobians of the
// quadratic residuals
struct D6 {
    double v = 0.0;
    std::array<double, 6> g{};
};

D6 operator+(const D6& a, const D6& b) {
    D6 r{a.v + b.v, {}};
    for (int i = 0; i < 6; ++i) r.g[i] = a.g[i] + b.g[i];
    return r;
}
D6 operator-(const D6& a, const D6& b) {
    D6 r{a.v - b.v, {}};
    for (int i = 0; i < 6; ++i) r.g[i] = a.g[i] - b.g[i];
    return r;
}
D6 operator-(const D6& a) {
    D6 r{-a.v, {}};
    for (int i = 0; i < 6; ++i) r.g[i] = -a.g[i];
    return r;
}
D6 operator*(const D6& a, const D6& b) {
    D6 r{a.v * b.v, {}};
    for (int i = 0; i < 6; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
    return r;
}
D6 operator*(double c, const D6& a) {
    D6 r{c * a.v, {}};
    for (int i = 0; i < 6; ++i) r.g[i] = c * a.g[i];
    return r;
}

template <class T>
std::array<T, 5> residual_t(const std::array<T, 6>& x) {
    const T &l1 = x[0], &l2 = x[1], &l3 = x[2], &n1 = x[3], &n2 = x[4], &n3 = x[5];
    return {
        2.0 * (n1 * l2) + n1 * n1 - l1 * n2 - n2 * n3 - l3 * n3,
        2.0 * (n2 * l3) + l3 * l3 - l2 * n3 - l1 * l2 - l1 * n1,
        -(l1 * l1) + n3 * n3 + l2 * l3 - n1 * n2,
        l1 * l1 + l3 * l3 + l1 * n3 + l3 * n3 + l1 * l3 + l2 * n1 + l3 * n1 + 2.0 * (l3 * n2),
        n1 * n1 + n3 * n3 + l3 * n2 + l1 * n3 + l3 * n1 + l1 * n1 + n3 * n1 + 2.0 * (l2 * n1),
    };
}

double max_norm(const std::array<double, 5>& f) {
    double r = 0.0;
    for (double v : f) r = std::max(r, std::abs(v));
    return r;
}

// (J^T J + mu I) d = -J^T f, Gaussian elimination with partial pivoting
bool solve6(double a[6][6], double b[6], double d[6]) {
    int piv[6];
    for (int i = 0; i < 6; ++i) piv[i] = i;
    for (int col = 0; col < 6; ++col) {
        int best = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        if (std::abs(a[best][col]) < 1e-300) return false;
        std::swap_ranges(a[col], a[col] + 6, a[best]);
        std::swap(b[col], b[best]);
        for (int r = col + 1; r < 6; ++r) {
            const double m = a[r][col] / a[col][col];
            for (int c = col; c < 6; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    for (int r = 5; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 6; ++c) s -= a[r][c] * d[c];
        d[r] = s / a[r][r];
    }
    (void)piv;
    return true;
}

struct LmResult {
    std::array<double, 6> x{};
    double fnorm = 0.0;
    bool converged = false;
};

LmResult levenberg_marquardt(std::array<double, 6> x) {
    double mu = 1e-3;
    std::array<double, 5> f = residual_t(x);
    double fn = max_norm(f);
    for (int iter = 0; iter < 120 && fn > 1e-15; ++iter) {
        std::array<D6, 6> xd;
        for (int i = 0; i < 6; ++i) {
            xd[i].v = x[i];
            xd[i].g = {};
            xd[i].g[i] = 1.0;
        }
        const std::array<D6, 5> fd = residual_t(xd);
        double jtj[6][6] = {}, jtf[6] = {};
        for (int r = 0; r < 5; ++r)
            for (int i = 0; i < 6; ++i) {
                jtf[i] += fd[r].g[i] * fd[r].v;
                for (int j = 0; j < 6; ++j) jtj[i][j] += fd[r].g[i] * fd[r].g[j];
            }
        bool stepped = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            double a[6][6], b[6], d[6];
            for (int i = 0; i < 6; ++i) {
                for (int j = 0; j < 6; ++j) a[i][j] = jtj[i][j];
                a[i][i] += mu;
                b[i] = -jtf[i];
            }
            if (!solve6(a, b, d)) {
                mu *= 10.0;
                continue;
            }
            std::array<double, 6> xn;
            for (int i = 0; i < 6; ++i) xn[i] = x[i] + d[i];
            const std::array<double, 5> fnew = residual_t(xn);
            if (max_norm(fnew) < fn) {
                x = xn;
                f = fnew;
                fn = max_norm(f);
                mu = std::max(mu * 0.4, 1e-12);
                stepped = true;
                break;
            }
            mu *= 6.0;
        }
        if (!stepped) break;
    }
    return {x, fn, fn <= 1e-12};
}

std::string classify(const std::array<double, 6>& x, double tol) {
    const double l1 = x[0], l2 = x[1], l3 = x[2], n1 = x[3], n2 = x[4], n3 = x[5];
    std::string out;
    auto join = [&out](const char* tag) {
        if (!out.empty()) out += ",";
        out += tag;
    };
    if (std::abs(l3) < tol && std::abs(n1) < tol && std::abs(n3 + l1) < tol) join("A");
    if (std::abs(l3 + l1 + l2) < tol && std::abs(n1 + l1 + l2) < tol && std::abs(n2 - l1) < tol &&
        std::abs(n3 - l2) < tol)
        join("B");
    if (std::abs(l3 + l1 + l2) < tol && std::abs(n1 - l1) < tol && std::abs(n2 - l2) < tol &&
        std::abs(n3 + l1 + l2) < tol)
        join("C");
    return out.empty() ? "outside known cases" : out;
}

// continued-fraction rationalization with small denominator
std::optional<Rat> rationalize(double v, long max_den, double tol) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 40; ++it) {
        const double fl = std::floor(x);
        const long a = static_cast<long>(fl);
        const long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - v) <= tol) return Rat(p1, q1);
        const double frac = x - fl;
        if (frac < 1e-14) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<ScanSolution> finalize(std::array<double, 6> x, double threshold) {
    double amax = 0.0;
    int imax = 0;
    for (int i = 0; i < 6; ++i)
        if (std::abs(x[i]) > amax) {
            amax = std::abs(x[i]);
            imax = i;
        }
    if (amax < 1e-6) return std::nullopt;  // trivial (abelian) ray
    const double scale = x[imax];
    for (int i = 0; i < 6; ++i) x[i] /= scale;
    ScanSolution sol;
    sol.x = x;
    sol.residual = max_norm(residual_t(x));
    if (sol.residual > threshold) return std::nullopt;
    // coordinates along the variety's flat directions are only good to
    // about sqrt(residual), so the family test must widen with it
    sol.family = classify(x, std::max(1e-6, 20.0 * std::sqrt(sol.residual)));
    // attempt exact re-verification through small-denominator rationals
    RVec3 lam{}, nu{};
    bool all_rational = true;
    for (int i = 0; i < 6 && all_rational; ++i) {
        auto r = rationalize(x[i], 64, 1e-9);
        if (!r)
            all_rational = false;
        else if (i < 3)
            lam[i] = *r;
        else
            nu[i - 3] = *r;
    }
    if (all_rational) {
        const ReducedSpec spec{lam, nu};
        const auto inv = invariance_residual(spec);
        if (is_zero(reduced_jacobi_residual(spec)) && inv[0] == 0 && inv[1] == 0) {
            sol.exact = true;
            sol.rationalized = spec;
        }
    }
    return sol;
}

}  // namespace

std::array<double, 5> scan_residual(const std::array<double, 6>& x) { return residual_t(x); }

std::optional<ScanSolution> scan_from(const std::array<double, 6>& start, double threshold) {
    const LmResult lm = levenberg_marquardt(start);
    if (lm.fnorm > threshold) return std::nullopt;
    return finalize(lm.x, threshold);
}

std::vector<ScanSolution> scan_invariance_variety(const ScanParams& params) {
    SampleRng rng(params.seed);
    std::map<std::array<long, 6>, ScanSolution> dedup;
    for (int t = 0; t < params.trials; ++t) {
        std::array<double, 6> start;
        for (int i = 0; i < 6; ++i) start[i] = rng.uniform(-2.0, 2.0);
        auto sol = scan_from(start, params.threshold);
        if (!sol) continue;
        std::array<long, 6> key;
        for (int i = 0; i < 6; ++i) key[i] = std::lround(sol->x[i] * 1e6);
        auto it = dedup.find(key);
        if (it == dedup.end() || sol->residual < it->second.residual) dedup[key] = *sol;
    }
    std::vector<ScanSolution> out;
    out.reserve(dedup.size());
    for (auto& [key, sol] : dedup) out.push_back(std::move(sol));
    return out;
}

}  // namespace circ3::lie
