#pragma once

#include <span>
#include <vector>

namespace qce {

// Samples along one line with uniform arc step between neighbours.
struct Seq {
    std::vector<double> values;
    double step = 1.0;
};

struct RobustParams {
    double epsilon = 0.0;  // slope budget, >= 0
};

// Running minimum left to right: result[j] = min(result[j-1], g[j]).
Seq sweep_decreasing(const Seq& g);
// Running minimum right to left.
Seq sweep_increasing(const Seq& g);
// Largest down-up minorant: pointwise max of the two sweeps. Exact in
// floating point (pure min/max selections).
Seq qce_1d(const Seq& g);

// Largest minorant that stays quasiconvex under every tilt g + p*x with
// |p| <= epsilon. Computed by relaxing the per-triple bound
//   v[k] <= max(v[j] - pt*(k-j)h, v[l] + pt*(l-k)h),
//   pt = clamp((v[j]-v[l]) / ((l-j)h), -eps, +eps)
// to an exact fixed point; a (j,l) pair scan evaluates one full relaxation
// round in O(N^2). Never decreases below min(g). Equals qce_1d when eps = 0.
Seq robust_qce_1d(const Seq& g, const RobustParams& p);

// -1 strictly left of the first minimiser (within tol), 0 on the closed
// interval spanned by the minimisers, +1 strictly right of the last one.
std::vector<int> classify_a(const Seq& u, double tol = 0.0);

// Nonincreasing (within tol) up to the first global argmin, nondecreasing
// after it.
bool is_down_up(const Seq& u, double tol = 0.0);

// Checks the clamped-tilt triple bound above for every j < k < l. O(N^3).
bool is_robust_qc_1d(const Seq& u, double epsilon, double tol = 0.0);

// In-place kernels shared with the n-d line solver; no input validation.
void qce_1d_inplace(std::span<double> v);
void robust_qce_1d_inplace(std::span<double> v, double epsilon, double h);

}  // namespace qce
