#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qce {

// Axis-aligned box used as a sampling domain. Entries past `dim` are unused.
struct Box {
    int dim = 0;
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};

    // Same [lo, hi] interval on every axis.
    static Box cube(int dim, double lo, double hi);
};

// Scalar function sampled on a uniform grid, 1 to 3 dimensions.
// Storage is row-major with the last axis fastest; unused shape entries stay
// at 1 so flat indexing works the same for every dimension.
struct GridFn {
    int dim = 0;
    std::array<int, 3> shape{1, 1, 1};
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::vector<double> values;

    std::size_t size() const {
        return static_cast<std::size_t>(shape[0]) * shape[1] * shape[2];
    }

    std::size_t flat(const std::array<int, 3>& idx) const {
        return (static_cast<std::size_t>(idx[0]) * shape[1] + idx[1]) * shape[2] + idx[2];
    }

    std::array<int, 3> unflat(std::size_t f) const {
        int i2 = static_cast<int>(f % shape[2]);
        f /= shape[2];
        int i1 = static_cast<int>(f % shape[1]);
        int i0 = static_cast<int>(f / shape[1]);
        return {i0, i1, i2};
    }

    bool in_bounds(const std::array<int, 3>& idx) const {
        for (int a = 0; a < 3; ++a)
            if (idx[a] < 0 || idx[a] >= shape[a]) return false;
        return true;
    }

    double at(const std::array<int, 3>& idx) const { return values[flat(idx)]; }
    double& at(const std::array<int, 3>& idx) { return values[flat(idx)]; }

    std::array<double, 3> coordinate_of(const std::array<int, 3>& idx) const;

    // Nearest lattice index, clamped to the grid.
    std::array<int, 3> index_of(const std::array<double, 3>& coord) const;
};

// Minimum value of a grid together with every index attaining it within tol.
struct MinInfo {
    double u_m = 0.0;
    std::vector<std::size_t> argmin_indices;  // flat, ascending
    double tol = 0.0;
};

using Sampler = std::function<double(std::span<const double>)>;

// Sample `f` on a uniform grid over `box` with the given per-axis counts
// (each >= 2). Non-finite samples are rejected with the offending coordinate
// in the error message.
GridFn build(const Box& box, std::span<const int> shape, const Sampler& f);

MinInfo min_info(const GridFn& u, double tol = 0.0);

// Plain-text grid file, round-trips doubles through 17 significant digits:
//   qcegrid 1
//   dim <d>
//   shape <n1> [n2] [n3]
//   origin <per axis>
//   spacing <per axis>
//   <one value per line, row-major, last axis fastest>
void write_grid(const GridFn& u, const std::string& path);
GridFn read_grid(const std::string& path);

}  // namespace qce
