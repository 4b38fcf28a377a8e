#pragma once

#include "pluecker/curve.hpp"
#include "pluecker/solver.hpp"

#include <string>
#include <vector>

namespace pluecker::numeric {

struct PlotOptions {
    double xmin = -2.0, xmax = 2.0;
    double ymin = -2.0, ymax = 2.0;
    int samples = 512;   // sample grid per axis
    int size_px = 760;   // square canvas
};

struct PlotInfo {
    int contour_segments = 0;
    int lines_drawn = 0;
};

/// SVG with the real locus of the curve in the affine chart z = 1 (marching
/// squares on the sample grid) and every real bitangent clipped to the
/// window. Byte-deterministic for identical inputs.
std::string render_plot_svg(const PlaneCurve& curve,
                            const std::vector<TangencySolution>& bitangents,
                            const PlotOptions& options, PlotInfo* info = nullptr);

} // namespace pluecker::numeric
