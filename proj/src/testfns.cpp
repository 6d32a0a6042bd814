#include "qce/testfns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qce {

Sampler two_cones(const ConeSpec& spec) {
    if (spec.dim != 2 && spec.dim != 3) throw std::runtime_error("two_cones: dim must be 2 or 3");
    const double ax = 0.5 * std::cos(spec.theta);
    const double ay = 0.5 * std::sin(spec.theta);
    const bool use_min = spec.combiner == Combiner::min_of;
    const double alpha = spec.alpha;
    const int dim = spec.dim;
    return [=](std::span<const double> x) {
        const double x2 = dim == 3 ? x[2] : 0.0;
        const auto dist_to = [&](double vx, double vy) {
            const double dx = x[0] - vx, dy = x[1] - vy;
            return std::sqrt(dx * dx + dy * dy + x2 * x2);
        };
        // 2D shifts the cone at +a, the 3D convention shifts the one at -a.
        const double plain = dim == 2 ? dist_to(-ax, -ay) : dist_to(ax, ay);
        const double shifted = (dim == 2 ? dist_to(ax, ay) : dist_to(-ax, -ay)) - alpha;
        return use_min ? std::min(plain, shifted) : std::max(plain, shifted);
    };
}

namespace {

double dist_to_segment(double px, double py, double qx, double qy) {
    // Segment from the origin to (qx, qy), axis-aligned in our use.
    const double len2 = qx * qx + qy * qy;
    const double t = std::clamp((px * qx + py * qy) / len2, 0.0, 1.0);
    const double dx = px - t * qx, dy = py - t * qy;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Sampler pacman_sdf(std::array<double, 2> center, double radius, int removed_quadrant) {
    if (!(radius > 0.0)) throw std::runtime_error("pacman_sdf: radius must be > 0");
    if (removed_quadrant < 0 || removed_quadrant > 3)
        throw std::runtime_error("pacman_sdf: removed_quadrant must be in 0..3");
    return [=](std::span<const double> x) {
        double px = x[0] - center[0], py = x[1] - center[1];
        // Reflect so the removed sector is the (+,+) quadrant.
        if (removed_quadrant == 1 || removed_quadrant == 2) px = -px;
        if (removed_quadrant == 2 || removed_quadrant == 3) py = -py;
        const double r = std::sqrt(px * px + py * py);
        // Arc spans angles [pi/2, 2pi]; the angular projection falls on it
        // unless the point is strictly inside the open first quadrant.
        double d_arc;
        if (px > 0.0 && py > 0.0)
            d_arc = std::min(std::hypot(px - radius, py), std::hypot(px, py - radius));
        else
            d_arc = std::abs(r - radius);
        const double d = std::min({d_arc, dist_to_segment(px, py, radius, 0.0),
                                   dist_to_segment(px, py, 0.0, radius)});
        const bool inside = r < radius && !(px >= 0.0 && py >= 0.0);
        return inside ? -d : d;
    };
}

Sampler chebyshev_plateau() {
    return [](std::span<const double> x) {
        double t = 0.0;
        for (double c : x) t = std::max(t, std::abs(c));
        if (t <= 0.25) return 40.0 * t;
        if (t <= 0.75) return 10.0;
        return 10.0 + 40.0 * (t - 0.75);
    };
}

Sampler neg_dist_to_interval() {
    return [](std::span<const double> x) { return -std::max(0.0, std::abs(x[0]) - 1.0); };
}

}  // namespace qce
