#pragma once

#include <array>
#include <string>

#include "puviz/raster.hpp"
#include "puviz/ternary.hpp"
#include "puviz/wheel.hpp"

namespace puviz {

enum class LegendBackground { White, Transparent };

// Disc of diameter size_px: azimuth -> theta, radius -> magnitude, colors
// through wheel_color. The disc center sits at ((size-1)/2, (size-1)/2)
// with radius (size-1)/2, so a pixel at distance r maps to m = r/R.
Raster render_wheel_legend(const WheelSpec& spec, int size_px,
                           LegendBackground background = LegendBackground::White);

// Pixel positions of the three triangle legend vertices (component 1 on
// top, 2 bottom-left, 3 bottom-right), exposed so callers can map pixels
// back to barycentric weights.
struct TriangleLegendGeometry {
    double x1, y1;
    double x2, y2;
    double x3, y3;
};
TriangleLegendGeometry triangle_legend_geometry(int size_px);

// Barycentric sweep at full intensity through composition_color, with the
// component labels printed next to their vertices.
Raster render_triangle_legend(const TriangleSpec& spec,
                              const std::array<std::string, 3>& labels, int size_px,
                              LegendBackground background = LegendBackground::White);

} // namespace puviz
