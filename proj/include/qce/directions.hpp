#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace qce {

// Unoriented lattice directions. Vectors are canonical: componentwise gcd 1,
// first nonzero component positive, unused trailing components zero.
struct DirectionSet {
    int dim = 2;
    std::vector<std::array<int, 3>> vectors;
    std::optional<int> width;  // max-norm bound when lattice-generated
};

// gcd-reduce and flip sign so the first nonzero component is positive.
std::array<int, 3> canonicalize(std::array<int, 3> v);

// All canonical coprime integer vectors with max-norm <= width, one per
// unoriented direction. Sorted by angle in [0, pi) for dim 2 (starting at
// (1,0)), lexicographically for dim 3. dim 1 yields the single direction (1).
DirectionSet lattice_directions(int dim, int width);

// k unoriented unit directions at angles j*pi/k, j = 0..k-1. Used for
// resolution analysis only, not lattice solving.
std::vector<std::array<double, 2>> equally_spaced_2d(int k);

// Largest angle an arbitrary direction can make with its nearest set member
// (both unoriented). 2D: exact, half the largest circular gap between
// consecutive mirrored direction angles. 3D: maximum over a Fibonacci-sphere
// sample of 2e6 points (covering radius ~2e-3 rad, so the value is a lower
// bound of the supremum tight to that resolution).
double directional_resolution(const DirectionSet& D);
double directional_resolution_2d(std::span<const std::array<double, 2>> dirs);

}  // namespace qce
