#include "qce/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qce {

Box Box::cube(int dim, double lo, double hi) {
    Box b;
    b.dim = dim;
    for (int a = 0; a < dim; ++a) {
        b.lo[a] = lo;
        b.hi[a] = hi;
    }
    return b;
}

std::array<double, 3> GridFn::coordinate_of(const std::array<int, 3>& idx) const {
    std::array<double, 3> c{};
    for (int a = 0; a < dim; ++a) c[a] = origin[a] + idx[a] * spacing[a];
    return c;
}

std::array<int, 3> GridFn::index_of(const std::array<double, 3>& coord) const {
    std::array<int, 3> idx{};
    for (int a = 0; a < dim; ++a) {
        int i = static_cast<int>(std::lround((coord[a] - origin[a]) / spacing[a]));
        if (i < 0) i = 0;
        if (i >= shape[a]) i = shape[a] - 1;
        idx[a] = i;
    }
    return idx;
}

GridFn build(const Box& box, std::span<const int> shape, const Sampler& f) {
    if (box.dim < 1 || box.dim > 3) throw std::invalid_argument("build: dim must be 1, 2, or 3");
    if (static_cast<int>(shape.size()) != box.dim)
        throw std::invalid_argument("build: shape rank does not match box dim");

    GridFn u;
    u.dim = box.dim;
    for (int a = 0; a < box.dim; ++a) {
        if (shape[a] < 2) throw std::invalid_argument("build: each axis needs at least 2 samples");
        if (!(box.hi[a] > box.lo[a]))
            throw std::invalid_argument("build: box must have positive extent on every axis");
        u.shape[a] = shape[a];
        u.origin[a] = box.lo[a];
        u.spacing[a] = (box.hi[a] - box.lo[a]) / (shape[a] - 1);
    }
    u.values.resize(u.size());

    std::array<double, 3> c{};
    std::size_t k = 0;
    for (int i0 = 0; i0 < u.shape[0]; ++i0)
        for (int i1 = 0; i1 < u.shape[1]; ++i1)
            for (int i2 = 0; i2 < u.shape[2]; ++i2, ++k) {
                c[0] = u.origin[0] + i0 * u.spacing[0];
                c[1] = u.origin[1] + i1 * u.spacing[1];
                c[2] = u.origin[2] + i2 * u.spacing[2];
                double v = f(std::span<const double>(c.data(), u.dim));
                if (!std::isfinite(v)) {
                    std::ostringstream os;
                    os << "build: non-finite sample at (";
                    for (int a = 0; a < u.dim; ++a) os << (a ? ", " : "") << c[a];
                    os << ")";
                    throw std::runtime_error(os.str());
                }
                u.values[k] = v;
            }
    return u;
}

MinInfo min_info(const GridFn& u, double tol) {
    if (u.values.empty()) throw std::invalid_argument("min_info: empty grid");
    if (!(tol >= 0.0)) throw std::invalid_argument("min_info: tol must be >= 0");
    MinInfo m;
    m.tol = tol;
    m.u_m = u.values[0];
    for (double v : u.values)
        if (v < m.u_m) m.u_m = v;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        if (u.values[i] <= m.u_m + tol) m.argmin_indices.push_back(i);
    return m;
}

void write_grid(const GridFn& u, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_grid: cannot open " + path);
    out << "qcegrid 1\n";
    out << "dim " << u.dim << "\n";
    out << "shape";
    for (int a = 0; a < u.dim; ++a) out << " " << u.shape[a];
    out << "\norigin";
    char buf[64];
    for (int a = 0; a < u.dim; ++a) {
        std::snprintf(buf, sizeof buf, "%.17g", u.origin[a]);
        out << " " << buf;
    }
    out << "\nspacing";
    for (int a = 0; a < u.dim; ++a) {
        std::snprintf(buf, sizeof buf, "%.17g", u.spacing[a]);
        out << " " << buf;
    }
    out << "\n";
    for (double v : u.values) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << "\n";
    }
    if (!out) throw std::runtime_error("write_grid: write failed for " + path);
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& msg) {
    std::ostringstream os;
    os << path << ":" << line << ": " << msg;
    throw std::runtime_error(os.str());
}

}  // namespace

GridFn read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_grid: cannot open " + path);

    std::string line;
    int lineno = 0;
    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) parse_fail(path, lineno + 1, std::string("missing ") + what);
        ++lineno;
    };

    next_line("header");
    if (line != "qcegrid 1") parse_fail(path, lineno, "expected 'qcegrid 1' header");

    GridFn u;
    {
        next_line("dim line");
        std::istringstream is(line);
        std::string key;
        is >> key >> u.dim;
        if (key != "dim" || is.fail() || u.dim < 1 || u.dim > 3)
            parse_fail(path, lineno, "expected 'dim <1|2|3>'");
    }
    {
        next_line("shape line");
        std::istringstream is(line);
        std::string key;
        is >> key;
        if (key != "shape") parse_fail(path, lineno, "expected 'shape ...'");
        for (int a = 0; a < u.dim; ++a) {
            is >> u.shape[a];
            if (is.fail() || u.shape[a] < 2) parse_fail(path, lineno, "bad shape entry");
        }
        int extra;
        if (is >> extra) parse_fail(path, lineno, "shape has more entries than dim");
    }
    auto read_reals = [&](const char* key, std::array<double, 3>& dst, bool positive) {
        next_line(key);
        std::istringstream is(line);
        std::string k;
        is >> k;
        if (k != key) parse_fail(path, lineno, std::string("expected '") + key + " ...'");
        for (int a = 0; a < u.dim; ++a) {
            is >> dst[a];
            if (is.fail() || !std::isfinite(dst[a]) || (positive && !(dst[a] > 0.0)))
                parse_fail(path, lineno, std::string("bad ") + key + " entry");
        }
    };
    read_reals("origin", u.origin, false);
    read_reals("spacing", u.spacing, true);

    u.values.resize(u.size());
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        next_line("value line");
        std::istringstream is(line);
        is >> u.values[i];
        if (is.fail()) parse_fail(path, lineno, "bad value");
        if (!std::isfinite(u.values[i])) parse_fail(path, lineno, "non-finite value");
    }
    return u;
}

}  // namespace qce
