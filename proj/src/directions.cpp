#include "qce/directions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qce {

std::array<int, 3> canonicalize(std::array<int, 3> v) {
    int g = 0;
    for (int c : v) g = std::gcd(g, std::abs(c));
    if (g == 0) throw std::runtime_error("canonicalize: zero vector");
    for (int& c : v) c /= g;
    for (int c : v) {
        if (c > 0) break;
        if (c < 0) {
            for (int& a : v) a = -a;
            break;
        }
    }
    return v;
}

namespace {

// Angle of an unoriented 2D direction, mapped into [0, pi).
double half_turn_angle(double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
}

}  // namespace

DirectionSet lattice_directions(int dim, int width) {
    if (dim < 1 || dim > 3) throw std::runtime_error("lattice_directions: dim must be 1, 2, or 3");
    if (width < 1) throw std::runtime_error("lattice_directions: width must be >= 1");
    DirectionSet D;
    D.dim = dim;
    D.width = width;
    if (dim == 1) {
        D.vectors.push_back({1, 0, 0});
        return D;
    }
    const int wa = width;
    const int wc = dim == 3 ? width : 0;
    std::vector<std::array<int, 3>> all;
    for (int a = -wa; a <= wa; ++a)
        for (int b = -wa; b <= wa; ++b)
            for (int c = -wc; c <= wc; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                all.push_back(canonicalize({a, b, c}));
            }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (dim == 2) {
        std::sort(all.begin(), all.end(), [](const auto& u, const auto& v) {
            return half_turn_angle(u[0], u[1]) < half_turn_angle(v[0], v[1]);
        });
    }
    D.vectors = std::move(all);
    return D;
}

std::vector<std::array<double, 2>> equally_spaced_2d(int k) {
    if (k < 2) throw std::runtime_error("equally_spaced_2d: k must be >= 2");
    std::vector<std::array<double, 2>> out;
    out.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double a = std::numbers::pi * j / k;
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

double directional_resolution_2d(std::span<const std::array<double, 2>> dirs) {
    if (dirs.empty()) throw std::runtime_error("directional_resolution_2d: empty set");
    std::vector<double> angles;
    angles.reserve(dirs.size());
    for (const auto& d : dirs) {
        if (d[0] == 0.0 && d[1] == 0.0)
            throw std::runtime_error("directional_resolution_2d: zero vector");
        angles.push_back(half_turn_angle(d[0], d[1]));
    }
    std::sort(angles.begin(), angles.end());
    // Directions repeat with period pi; the wrap-around gap closes the circle.
    double max_gap = angles.front() + std::numbers::pi - angles.back();
    for (size_t i = 1; i < angles.size(); ++i)
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    return max_gap / 2.0;
}

namespace {

double resolution_3d_sampled(const DirectionSet& D) {
    std::vector<std::array<double, 3>> unit;
    unit.reserve(D.vectors.size());
    for (const auto& v : D.vectors) {
        const double n = std::sqrt(double(v[0]) * v[0] + double(v[1]) * v[1] + double(v[2]) * v[2]);
        unit.push_back({v[0] / n, v[1] / n, v[2] / n});
    }
    const long N = 2'000'000;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (long i = 0; i < N; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / N;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        const double x = r * std::cos(phi), y = r * std::sin(phi);
        double best = 0.0;
        for (const auto& d : unit)
            best = std::max(best, std::abs(x * d[0] + y * d[1] + z * d[2]));
        worst = std::max(worst, std::acos(std::min(1.0, best)));
    }
    return worst;
}

}  // namespace

double directional_resolution(const DirectionSet& D) {
    if (D.vectors.empty()) throw std::runtime_error("directional_resolution: empty set");
    if (D.dim == 1) return 0.0;
    if (D.dim == 2) {
        std::vector<std::array<double, 2>> dirs;
        dirs.reserve(D.vectors.size());
        for (const auto& v : D.vectors) dirs.push_back({double(v[0]), double(v[1])});
        return directional_resolution_2d(dirs);
    }
    return resolution_3d_sampled(D);
}

}  // namespace qce
