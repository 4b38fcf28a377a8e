#include "pluecker/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pluecker::numeric {

namespace {

struct Segment {
    double x1, y1, x2, y2;
};

double interp(double a, double b) { return a / (a - b); }

/// Marching squares over the sample grid; values[j * n + i] at (x_i, y_j).
std::vector<Segment> contour_segments(const std::vector<double>& values, int n, double xmin,
                                      double dx, double ymin, double dy) {
    std::vector<Segment> out;
    auto value = [&](int i, int j) { return values[static_cast<std::size_t>(j) * n + i]; };
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i + 1 < n; ++i) {
            const double bl = value(i, j), br = value(i + 1, j);
            const double tl = value(i, j + 1), tr = value(i + 1, j + 1);
            const int mask = (bl > 0 ? 1 : 0) | (br > 0 ? 2 : 0) | (tr > 0 ? 4 : 0) |
                             (tl > 0 ? 8 : 0);
            if (mask == 0 || mask == 15) continue;
            const double x0 = xmin + i * dx, y0 = ymin + j * dy;
            // Edge crossings: 0 bottom, 1 right, 2 top, 3 left.
            auto edge_point = [&](int e) -> std::pair<double, double> {
                switch (e) {
                    case 0: return {x0 + dx * interp(bl, br), y0};
                    case 1: return {x0 + dx, y0 + dy * interp(br, tr)};
                    case 2: return {x0 + dx * interp(tl, tr), y0 + dy};
                    default: return {x0, y0 + dy * interp(bl, tl)};
                }
            };
            auto emit = [&](int e1, int e2) {
                const auto [ax, ay] = edge_point(e1);
                const auto [bx, by] = edge_point(e2);
                out.push_back(Segment{ax, ay, bx, by});
            };
            switch (mask) {
                case 1: case 14: emit(3, 0); break;
                case 2: case 13: emit(0, 1); break;
                case 3: case 12: emit(3, 1); break;
                case 4: case 11: emit(1, 2); break;
                case 6: case 9: emit(0, 2); break;
                case 7: case 8: emit(3, 2); break;
                case 5:
                    if (bl + br + tr + tl > 0) { emit(0, 1); emit(3, 2); }
                    else { emit(0, 3); emit(1, 2); }
                    break;
                case 10:
                    if (bl + br + tr + tl > 0) { emit(0, 3); emit(1, 2); }
                    else { emit(0, 1); emit(3, 2); }
                    break;
                default: break;
            }
        }
    }
    return out;
}

/// Clip the line a*x + b*y + c = 0 to the window; false if it misses.
bool clip_line(double a, double b, double c, const PlotOptions& o, Segment& seg) {
    const double n2 = a * a + b * b;
    if (n2 < 1e-30) return false;
    // Base point closest to the origin, direction along the line.
    const double px = -a * c / n2, py = -b * c / n2;
    const double dxd = b, dyd = -a;
    double lo = -1e18, hi = 1e18;
    auto narrow = [&](double p, double d, double lim_lo, double lim_hi) {
        if (std::abs(d) < 1e-30) return p >= lim_lo && p <= lim_hi;
        double s1 = (lim_lo - p) / d, s2 = (lim_hi - p) / d;
        if (s1 > s2) std::swap(s1, s2);
        lo = std::max(lo, s1);
        hi = std::min(hi, s2);
        return true;
    };
    if (!narrow(px, dxd, o.xmin, o.xmax)) return false;
    if (!narrow(py, dyd, o.ymin, o.ymax)) return false;
    if (lo >= hi) return false;
    seg = Segment{px + lo * dxd, py + lo * dyd, px + hi * dxd, py + hi * dyd};
    return true;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // Avoid the two representations of zero.
    if (std::string_view(buf) == "-0.00") return "0.00";
    return buf;
}

} // namespace

std::string render_plot_svg(const PlaneCurve& curve,
                            const std::vector<TangencySolution>& bitangents,
                            const PlotOptions& options, PlotInfo* info) {
    const int n = options.samples;
    const double dx = (options.xmax - options.xmin) / (n - 1);
    const double dy = (options.ymax - options.ymin) / (n - 1);

    std::vector<double> values(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        const double y = options.ymin + j * dy;
        for (int i = 0; i < n; ++i) {
            const double x = options.xmin + i * dx;
            double acc = 0.0;
            for (const auto& [m, c] : curve.terms())
                acc += polyring::to_double(c) * std::pow(x, m.x) * std::pow(y, m.y);
            values[static_cast<std::size_t>(j) * n + i] = acc;
        }
    }
    const std::vector<Segment> contour =
        contour_segments(values, n, options.xmin, dx, options.ymin, dy);

    const double size = options.size_px;
    auto to_px_x = [&](double x) { return size * (x - options.xmin) / (options.xmax - options.xmin); };
    auto to_px_y = [&](double y) { return size * (options.ymax - y) / (options.ymax - options.ymin); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px
        << "\" height=\"" << options.size_px << "\" viewBox=\"0 0 " << options.size_px << " "
        << options.size_px << "\">\n"
        << "<rect width=\"" << options.size_px << "\" height=\"" << options.size_px
        << "\" fill=\"#ffffff\"/>\n";

    int lines_drawn = 0;
    for (const TangencySolution& sol : bitangents) {
        if (!sol.is_real) continue;
        const std::array<double, 3> d = real_representative(sol.line.dual);
        Segment seg{};
        if (!clip_line(d[0], d[1], d[2], options, seg)) continue;
        svg << "<line x1=\"" << fmt(to_px_x(seg.x1)) << "\" y1=\"" << fmt(to_px_y(seg.y1))
            << "\" x2=\"" << fmt(to_px_x(seg.x2)) << "\" y2=\"" << fmt(to_px_y(seg.y2))
            << "\" stroke=\"#b03030\" stroke-width=\"1\"/>\n";
        ++lines_drawn;
    }

    svg << "<path fill=\"none\" stroke=\"#205080\" stroke-width=\"1.5\" d=\"";
    for (const Segment& seg : contour)
        svg << "M" << fmt(to_px_x(seg.x1)) << " " << fmt(to_px_y(seg.y1)) << "L"
            << fmt(to_px_x(seg.x2)) << " " << fmt(to_px_y(seg.y2));
    svg << "\"/>\n</svg>\n";

    if (info) {
        info->contour_segments = static_cast<int>(contour.size());
        info->lines_drawn = lines_drawn;
    }
    return svg.str();
}

} // namespace pluecker::numeric
