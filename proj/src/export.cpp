#include "qce/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qce {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_pbm(const Mask& m, const std::string& path) {
    if (m.dim != 2) throw std::runtime_error("write_pbm: 2D masks only");
    auto out = open_out(path);
    out << "P1\n" << m.shape[1] << " " << m.shape[0] << "\n";
    for (int i = 0; i < m.shape[0]; ++i) {
        for (int j = 0; j < m.shape[1]; ++j) {
            if (j) out << ' ';
            out << (m.on[m.flat(i, j)] ? '1' : '0');
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_svg_contours(const std::string& path, const GridFn& u, const ContourSet& solid,
                        const ContourSet* dashed) {
    if (u.dim != 2) throw std::runtime_error("write_svg_contours: 2D grids only");
    const double width = 800.0, height = 600.0, margin = 40.0;
    const double lo0 = u.origin[0], lo1 = u.origin[1];
    const double hi0 = lo0 + (u.shape[0] - 1) * u.spacing[0];
    const double hi1 = lo1 + (u.shape[1] - 1) * u.spacing[1];
    const double span0 = hi0 - lo0, span1 = hi1 - lo1;
    const double scale =
        std::min((width - 2 * margin) / span0, (height - 2 * margin) / span1);
    // Axis 0 runs right, axis 1 runs up; center the domain in the viewport.
    const double offx = (width - scale * span0) / 2.0;
    const double offy = (height - scale * span1) / 2.0;
    auto sx = [&](double c0) { return offx + scale * (c0 - lo0); };
    auto sy = [&](double c1) { return height - offy - scale * (c1 - lo1); };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto emit = [&](const ContourSet& cs, bool dash, const char* tag) {
        for (size_t k = 0; k < cs.size(); ++k) {
            out << "<g id=\"" << tag << "-level-" << k << "\" fill=\"none\" stroke=\""
                << palette[k % 8] << "\" stroke-width=\"1.5\"";
            if (dash) out << " stroke-dasharray=\"6 4\"";
            out << ">\n";
            for (const auto& line : cs[k].polylines) {
                out << "<path d=\"";
                for (size_t p = 0; p < line.size(); ++p)
                    out << (p ? " L " : "M ") << fmt_short(sx(line[p][0])) << " "
                        << fmt_short(sy(line[p][1]));
                out << "\"/>\n";
            }
            out << "</g>\n";
        }
    };
    emit(solid, false, "solid");
    if (dashed) emit(*dashed, true, "overlay");
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_vtk(const GridFn& u, const std::string& path) {
    auto out = open_out(path);
    // VTK iterates x fastest; map it to our fastest (last) axis.
    int n[3] = {1, 1, 1};
    double org[3] = {0, 0, 0}, sp[3] = {1, 1, 1};
    for (int a = 0; a < u.dim; ++a) {
        n[a] = u.shape[u.dim - 1 - a];
        org[a] = u.origin[u.dim - 1 - a];
        sp[a] = u.spacing[u.dim - 1 - a];
    }
    out << "# vtk DataFile Version 3.0\n";
    out << "scalar grid\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << n[0] << " " << n[1] << " " << n[2] << "\n";
    out << "ORIGIN " << fmt(org[0]) << " " << fmt(org[1]) << " " << fmt(org[2]) << "\n";
    out << "SPACING " << fmt(sp[0]) << " " << fmt(sp[1]) << " " << fmt(sp[2]) << "\n";
    out << "POINT_DATA " << u.values.size() << "\n";
    out << "SCALARS values double 1\n";
    out << "LOOKUP_TABLE default\n";
    for (double v : u.values) out << fmt(v) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qce
