#include "qce/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qce {

namespace {

bool inside(const std::array<int, 3>& shape, const std::array<int, 3>& p) {
    for (int a = 0; a < 3; ++a)
        if (p[a] < 0 || p[a] >= shape[a]) return false;
    return true;
}

std::array<int, 3> advance(const std::array<int, 3>& p, const std::array<int, 3>& v, int k) {
    return {p[0] + k * v[0], p[1] + k * v[1], p[2] + k * v[2]};
}

double euclid_step(const GridFn& g, const std::array<int, 3>& v) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a) s += (v[a] * g.spacing[a]) * (v[a] * g.spacing[a]);
    return std::sqrt(s);
}

// Bound on the middle value from the pair (x, y) sitting j and m-j steps
// away; epsilon = 0 degenerates to max(vx, vy).
double triple_bound(double vx, double vy, int j, int m, double h, double epsilon) {
    if (epsilon == 0.0) return std::max(vx, vy);
    const double pt = std::clamp((vx - vy) / (m * h), -epsilon, epsilon);
    return std::max(vx - pt * (j * h), vy + pt * ((m - j) * h));
}

// Visit every collinear triple along +v: x, z = x + j v, y = x + m v.
template <typename F>
void for_each_triple(const GridFn& u, const std::array<int, 3>& v, F&& f) {
    std::array<int, 3> x{};
    for (x[0] = 0; x[0] < u.shape[0]; ++x[0])
        for (x[1] = 0; x[1] < u.shape[1]; ++x[1])
            for (x[2] = 0; x[2] < u.shape[2]; ++x[2])
                for (int m = 2; inside(u.shape, advance(x, v, m)); ++m)
                    for (int j = 1; j < m; ++j) f(x, advance(x, v, j), advance(x, v, m), j, m);
}

GridFn relax_to_fixed_point(const GridFn& g, const DirectionSet& D, double epsilon) {
    if (D.dim != g.dim) throw std::runtime_error("oracle: direction set dimension mismatch");
    if (!(std::isfinite(epsilon) && epsilon >= 0.0))
        throw std::runtime_error("oracle: epsilon must be finite and >= 0");
    GridFn u = g;
    for (long round = 0; round < 1'000'000; ++round) {
        bool changed = false;
        for (const auto& v : D.vectors) {
            const double h = euclid_step(g, v);
            for_each_triple(u, v, [&](const auto& x, const auto& z, const auto& y, int j, int m) {
                double& uz = u.values[u.flat(z)];
                const double bound =
                    triple_bound(u.values[u.flat(x)], u.values[u.flat(y)], j, m, h, epsilon);
                if (uz > bound) {
                    uz = bound;
                    changed = true;
                }
            });
        }
        if (!changed) return u;
    }
    throw std::runtime_error("oracle: relaxation failed to reach a fixed point");
}

}  // namespace

GridFn dqce_oracle(const GridFn& g, const DirectionSet& D) {
    return relax_to_fixed_point(g, D, 0.0);
}

GridFn robust_dqce_oracle(const GridFn& g, const DirectionSet& D, double epsilon) {
    return relax_to_fixed_point(g, D, epsilon);
}

Seq robust_qce_oracle_1d(const Seq& g, double epsilon) {
    if (!(std::isfinite(epsilon) && epsilon >= 0.0))
        throw std::runtime_error("robust_qce_oracle_1d: epsilon must be finite and >= 0");
    if (g.values.empty()) throw std::runtime_error("robust_qce_oracle_1d: empty sequence");
    Seq u = g;
    const int n = static_cast<int>(u.values.size());
    for (long round = 0; round < 1'000'000; ++round) {
        bool changed = false;
        for (int x = 0; x < n; ++x)
            for (int m = 2; x + m < n; ++m)
                for (int j = 1; j < m; ++j) {
                    double& uz = u.values[static_cast<size_t>(x + j)];
                    const double bound =
                        triple_bound(u.values[static_cast<size_t>(x)],
                                     u.values[static_cast<size_t>(x + m)], j, m, u.step, epsilon);
                    if (uz > bound) {
                        uz = bound;
                        changed = true;
                    }
                }
        if (!changed) return u;
    }
    throw std::runtime_error("robust_qce_oracle_1d: relaxation failed to reach a fixed point");
}

ViolationReport qc_violation(const GridFn& u, const DirectionSet& D, double epsilon,
                             double threshold) {
    if (D.dim != u.dim) throw std::runtime_error("qc_violation: direction set dimension mismatch");
    if (!(std::isfinite(epsilon) && epsilon >= 0.0))
        throw std::runtime_error("qc_violation: epsilon must be finite and >= 0");
    ViolationReport rep;
    rep.threshold = threshold;
    for (const auto& v : D.vectors) {
        const double h = euclid_step(u, v);
        for_each_triple(u, v, [&](const auto& x, const auto& z, const auto& y, int j, int m) {
            const double bound =
                triple_bound(u.values[u.flat(x)], u.values[u.flat(y)], j, m, h, epsilon);
            const double viol = u.values[u.flat(z)] - bound;
            if (viol > threshold) ++rep.count_above;
            if (viol > rep.max_violation) {
                rep.max_violation = viol;
                rep.worst_triple = {u.flat(x), u.flat(z), u.flat(y)};
                rep.worst_direction = v;
            }
        });
    }
    return rep;
}

double hj_residual(const GridFn& u, const std::array<int, 3>& x) {
    for (int a = 0; a < u.dim; ++a)
        if (x[a] < 1 || x[a] > u.shape[a] - 2)
            throw std::runtime_error("hj_residual: index must be interior");
    for (int a = u.dim; a < 3; ++a)
        if (x[a] != 0) throw std::runtime_error("hj_residual: index out of range");

    std::array<double, 3> grad{0, 0, 0};
    for (int a = 0; a < u.dim; ++a) {
        auto hi = x, lo = x;
        ++hi[a], --lo[a];
        grad[a] = (u.values[u.flat(hi)] - u.values[u.flat(lo)]) / (2.0 * u.spacing[a]);
    }
    const auto cx = u.coordinate_of(x);
    const double ux = u.values[u.flat(x)];
    double best = -std::numeric_limits<double>::infinity();
    std::array<int, 3> y{};
    for (y[0] = 0; y[0] < u.shape[0]; ++y[0])
        for (y[1] = 0; y[1] < u.shape[1]; ++y[1])
            for (y[2] = 0; y[2] < u.shape[2]; ++y[2]) {
                if (u.values[u.flat(y)] > ux) continue;
                const auto cy = u.coordinate_of(y);
                double dot = 0.0;
                for (int a = 0; a < u.dim; ++a) dot += grad[a] * (cy[a] - cx[a]);
                best = std::max(best, dot);
            }
    return best;
}

}  // namespace qce
