#pragma once

#include <array>

#include "qce/grid.hpp"

namespace qce {

enum class Combiner { min_of, max_of };

struct ConeSpec {
    int dim = 2;                           // 2 or 3
    double theta = 0.0;                    // rotation of the vertex axis in the x1-x2 plane
    double alpha = 0.0;                    // vertical shift of the second cone
    Combiner combiner = Combiner::min_of;  // min gives a nontrivial envelope
};

// Two Euclidean distance cones with vertices at -a and +a, where
// a = R(theta)(0.5, 0[, 0]). The shifted cone sits at the +a vertex in 2D
// and at the -a vertex in 3D:
//   2D: combiner(|x + a|, |x - a| - alpha)
//   3D: combiner(|x - a|, |x + a| - alpha)
Sampler two_cones(const ConeSpec& spec);

// Signed distance to a disk with one closed quadrant sector removed:
// negative inside the remaining region, zero on its boundary (the 3/4 arc
// plus the two radial notch edges), positive outside. removed_quadrant
// counts 0..3 counterclockwise from the (+,+) quadrant.
Sampler pacman_sdf(std::array<double, 2> center = {0.0, 0.0}, double radius = 1.0,
                   int removed_quadrant = 0);

// f(max_i |x_i|) with f piecewise linear: slope 40 on [0, 0.25], flat value
// 10 on [0.25, 0.75], slope 40 beyond. Quasiconvex (square sublevel sets)
// but not robustly so along rays through the plateau.
Sampler chebyshev_plateau();

// x -> -dist(x, [-1, 1]): not quasiconvex, but no three nearby samples show
// it; the canonical 1D instance whose envelope on [-2, 2] is constant -1.
Sampler neg_dist_to_interval();

}  // namespace qce
