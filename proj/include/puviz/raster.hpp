#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "puviz/colorspace.hpp"

namespace puviz {

// Row-major RGB raster in nonlinear sRGB, double per channel, plus an
// optional alpha plane in [0,1] (empty means fully opaque). Analysis runs
// on the double channels; quantization happens only at PNG output.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<SrgbColor> pixels;
    std::vector<double> alpha;

    Raster() = default;
    Raster(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {}

    bool has_alpha() const { return !alpha.empty(); }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    SrgbColor& at(int x, int y) { return pixels[index(x, y)]; }
    const SrgbColor& at(int x, int y) const { return pixels[index(x, y)]; }
};

// round(c*255) clamped to [0,255].
std::uint8_t quantize8(double channel);

// A rendered image plus what the renderer had to do to produce it.
struct RenderResult {
    Raster image;
    long adjusted_pixels = 0;  // pixels the gamut policy modified
    double scale_used = 0.0;   // resolved vmax / c_total_max
};

} // namespace puviz
