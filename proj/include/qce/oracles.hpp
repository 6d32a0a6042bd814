#pragma once

#include <array>
#include <cstddef>

#include "qce/directions.hpp"
#include "qce/envelope1d.hpp"
#include "qce/grid.hpp"

namespace qce {

struct ViolationReport {
    double max_violation = 0.0;
    std::array<size_t, 3> worst_triple{0, 0, 0};  // flat indices (x, z, y)
    std::array<int, 3> worst_direction{0, 0, 0};
    size_t count_above = 0;  // triples violating by more than threshold
    double threshold = 0.0;
};

// Brute-force discrete D-QCE: starting from g, enforce
//   v[z] <- min(v[z], max(v[x], v[y]))
// over every collinear index triple x < z < y along every direction of D,
// repeated until nothing changes. The fixed point is the largest function
// <= g satisfying every triple bound. Intended for small grids.
GridFn dqce_oracle(const GridFn& g, const DirectionSet& D);

// Same relaxation with the clamped-tilt robust bound (arc step per
// direction). Defines the n-D robust envelope target at desk scale.
GridFn robust_dqce_oracle(const GridFn& g, const DirectionSet& D, double epsilon);

// 1D robust triple relaxation to a fixed point; the reference for
// robust_qce_1d. Small N only (O(N^3) per round).
Seq robust_qce_oracle_1d(const Seq& g, double epsilon);

// Worst violation of the triple bound over all collinear triples along D.
// epsilon = 0 measures plain quasiconvexity: (u[z] - max(u[x], u[y]))+.
ViolationReport qc_violation(const GridFn& u, const DirectionSet& D, double epsilon = 0.0,
                             double threshold = 1e-12);

// sup over grid points y with u(y) <= u(x) of grad u(x) . (y - x), gradient
// by central differences; x must be interior. Diagnostic for the nonlocal
// first-order operator; >= 0 always (y = x is admissible).
double hj_residual(const GridFn& u, const std::array<int, 3>& x);

}  // namespace qce
