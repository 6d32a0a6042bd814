#include "qce/levelset.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace qce {

size_t Mask::count() const {
    size_t n = 0;
    for (auto b : on) n += b != 0;
    return n;
}

Mask sublevel_mask(const GridFn& u, double alpha) {
    Mask m;
    m.dim = u.dim;
    m.shape = u.shape;
    m.on.resize(u.values.size());
    for (size_t i = 0; i < u.values.size(); ++i) m.on[i] = u.values[i] <= alpha ? 1 : 0;
    return m;
}

HullResult hull_via_qce(const GridFn& g, double alpha, const DirectionSet& D,
                        const SolveParams& params) {
    auto [u, report] = solve(g, D, params);
    Mask mask = sublevel_mask(u, alpha);
    return {std::move(u), std::move(mask), std::move(report)};
}

namespace {

using Pt = std::array<std::int64_t, 2>;

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise hull, collinear points dropped; 2 points for collinear
// input, 1 for a single point.
std::vector<Pt> monotone_chain(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Pt> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (cross(a, b, p) != 0) return false;
    const std::int64_t dot =
        (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
    const std::int64_t len2 =
        (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
    return dot >= 0 && dot <= len2;
}

}  // namespace

Mask convex_hull_oracle(const Mask& m) {
    if (m.dim != 2) throw std::runtime_error("convex_hull_oracle: 2D masks only");
    std::vector<Pt> pts;
    for (int i = 0; i < m.shape[0]; ++i)
        for (int j = 0; j < m.shape[1]; ++j)
            if (m.on[m.flat(i, j)]) pts.push_back({i, j});
    if (pts.empty()) throw std::runtime_error("convex_hull_oracle: empty mask");
    const std::vector<Pt> hull = monotone_chain(std::move(pts));

    Mask out;
    out.dim = 2;
    out.shape = m.shape;
    out.on.assign(m.on.size(), 0);
    for (int i = 0; i < m.shape[0]; ++i)
        for (int j = 0; j < m.shape[1]; ++j) {
            const Pt p{i, j};
            bool in = true;
            if (hull.size() == 1)
                in = p == hull[0];
            else if (hull.size() == 2)
                in = on_segment(hull[0], hull[1], p);
            else
                for (size_t k = 0; k < hull.size() && in; ++k)
                    in = cross(hull[k], hull[(k + 1) % hull.size()], p) >= 0;
            out.on[out.flat(i, j)] = in ? 1 : 0;
        }
    return out;
}

MaskDiff mask_diff(const Mask& a, const Mask& b) {
    if (a.shape != b.shape || a.dim != b.dim)
        throw std::runtime_error("mask_diff: shape mismatch");
    MaskDiff d;
    size_t united = 0;
    for (size_t i = 0; i < a.on.size(); ++i) {
        const bool pa = a.on[i] != 0, pb = b.on[i] != 0;
        d.count += pa != pb;
        united += pa || pb;
    }
    d.fraction = united == 0 ? 0.0 : static_cast<double>(d.count) / static_cast<double>(united);
    return d;
}

namespace {

// Grid-edge ids give exact contour connectivity: every crossing lies on a
// unique node-to-node edge, so chaining never compares floating points.
// axis 0: edge (i,j)-(i,j+1); axis 1: edge (i,j)-(i+1,j).
std::int64_t edge_id(int axis, int i, int j, const std::array<int, 3>& shape) {
    return (static_cast<std::int64_t>(axis) * shape[0] + i) * shape[1] + j;
}

}  // namespace

ContourSet marching_squares(const GridFn& u, std::span<const double> levels) {
    if (u.dim != 2) throw std::runtime_error("marching_squares: 2D grids only");
    ContourSet out;
    const int s0 = u.shape[0], s1 = u.shape[1];
    auto val = [&](int i, int j) { return u.values[u.flat({i, j, 0})]; };

    for (const double L : levels) {
        LevelContours lc;
        lc.level = L;

        std::unordered_map<std::int64_t, std::array<double, 2>> point_of;
        auto crossing = [&](int axis, int i, int j) {
            const std::int64_t id = edge_id(axis, i, j, u.shape);
            if (!point_of.count(id)) {
                const double v0 = val(i, j);
                const double v1 = axis == 0 ? val(i, j + 1) : val(i + 1, j);
                const double t = (L - v0) / (v1 - v0);
                auto c = u.coordinate_of({i, j, 0});
                if (axis == 0)
                    c[1] += t * u.spacing[1];
                else
                    c[0] += t * u.spacing[0];
                point_of.emplace(id, std::array<double, 2>{c[0], c[1]});
            }
            return id;
        };

        std::vector<std::pair<std::int64_t, std::int64_t>> segments;
        for (int i = 0; i + 1 < s0; ++i)
            for (int j = 0; j + 1 < s1; ++j) {
                const bool a00 = val(i, j) > L, a01 = val(i, j + 1) > L;
                const bool a11 = val(i + 1, j + 1) > L, a10 = val(i + 1, j) > L;
                // Cell cycle c00 -top- c01 -right- c11 -bottom- c10 -left- c00.
                const bool top = a00 != a01, right = a01 != a11;
                const bool bottom = a10 != a11, left = a00 != a10;
                const int n = top + right + bottom + left;
                if (n == 0) continue;
                const auto e_top = [&] { return crossing(0, i, j); };
                const auto e_right = [&] { return crossing(1, i, j + 1); };
                const auto e_bottom = [&] { return crossing(0, i + 1, j); };
                const auto e_left = [&] { return crossing(1, i, j); };
                if (n == 2) {
                    std::array<std::int64_t, 2> ends{};
                    int c = 0;
                    if (top) ends[c++] = e_top();
                    if (right) ends[c++] = e_right();
                    if (bottom) ends[c++] = e_bottom();
                    if (left) ends[c++] = e_left();
                    segments.emplace_back(ends[0], ends[1]);
                } else {
                    // Saddle: signs alternate; the cell-average sign decides
                    // which diagonal pair of corners the contour isolates.
                    const double avg = (val(i, j) + val(i, j + 1) + val(i + 1, j) + val(i + 1, j + 1)) / 4.0;
                    if ((avg > L) == a00) {
                        segments.emplace_back(e_top(), e_right());
                        segments.emplace_back(e_bottom(), e_left());
                    } else {
                        segments.emplace_back(e_top(), e_left());
                        segments.emplace_back(e_right(), e_bottom());
                    }
                }
            }

        // Chain segments into maximal paths: open paths first (from
        // degree-1 edges), then leftover cycles.
        std::unordered_map<std::int64_t, std::vector<size_t>> incident;
        for (size_t s = 0; s < segments.size(); ++s) {
            incident[segments[s].first].push_back(s);
            incident[segments[s].second].push_back(s);
        }
        std::vector<bool> used(segments.size(), false);
        auto walk = [&](std::int64_t start) {
            std::vector<std::array<double, 2>> line{point_of.at(start)};
            std::int64_t cur = start;
            for (;;) {
                size_t next = segments.size();
                for (size_t s : incident[cur])
                    if (!used[s]) {
                        next = s;
                        break;
                    }
                if (next == segments.size()) break;
                used[next] = true;
                cur = segments[next].first == cur ? segments[next].second : segments[next].first;
                line.push_back(point_of.at(cur));
            }
            return line;
        };
        for (const auto& [edge, segs] : incident)
            if (segs.size() == 1 && !used[segs[0]]) lc.polylines.push_back(walk(edge));
        for (size_t s = 0; s < segments.size(); ++s)
            if (!used[s]) lc.polylines.push_back(walk(segments[s].first));

        out.push_back(std::move(lc));
    }
    return out;
}

}  // namespace qce
