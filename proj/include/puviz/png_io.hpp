#pragma once

#include <string>

#include "puviz/raster.hpp"

namespace puviz {

// 8-bit/channel RGB (or RGBA when the raster has an alpha plane), sRGB
// intent, fixed compression settings so identical rasters serialize to
// identical bytes. Channels quantize as round(c*255).
void save_png(const Raster& image, const std::string& path);

// Reads any libpng-supported file back as an 8-bit RGB(A) raster with
// channels in [0,1].
Raster load_png(const std::string& path);

} // namespace puviz
