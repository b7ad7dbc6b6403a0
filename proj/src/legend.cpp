#include "puviz/legend.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "puviz/errors.hpp"
#include "puviz/parallel.hpp"

namespace puviz {

namespace {

void validate_size(int size_px) {
    if (size_px < 64) throw InvalidInputError("legend size must be at least 64 px");
}

// 5x7 glyphs for label rendering, uppercase letters and digits only;
// anything else renders as a blank column.
struct Glyph {
    char ch;
    const char* rows[7];
};

constexpr Glyph kGlyphs[] = {
    {'A', {" ### ", "#   #", "#   #", "#####", "#   #", "#   #", "#   #"}},
    {'B', {"#### ", "#   #", "#   #", "#### ", "#   #", "#   #", "#### "}},
    {'C', {" ### ", "#   #", "#    ", "#    ", "#    ", "#   #", " ### "}},
    {'D', {"#### ", "#   #", "#   #", "#   #", "#   #", "#   #", "#### "}},
    {'E', {"#####", "#    ", "#    ", "#### ", "#    ", "#    ", "#####"}},
    {'F', {"#####", "#    ", "#    ", "#### ", "#    ", "#    ", "#    "}},
    {'G', {" ### ", "#   #", "#    ", "# ###", "#   #", "#   #", " ### "}},
    {'H', {"#   #", "#   #", "#   #", "#####", "#   #", "#   #", "#   #"}},
    {'I', {" ### ", "  #  ", "  #  ", "  #  ", "  #  ", "  #  ", " ### "}},
    {'J', {"  ###", "   # ", "   # ", "   # ", "   # ", "#  # ", " ##  "}},
    {'K', {"#   #", "#  # ", "# #  ", "##   ", "# #  ", "#  # ", "#   #"}},
    {'L', {"#    ", "#    ", "#    ", "#    ", "#    ", "#    ", "#####"}},
    {'M', {"#   #", "## ##", "# # #", "# # #", "#   #", "#   #", "#   #"}},
    {'N', {"#   #", "##  #", "# # #", "#  ##", "#   #", "#   #", "#   #"}},
    {'O', {" ### ", "#   #", "#   #", "#   #", "#   #", "#   #", " ### "}},
    {'P', {"#### ", "#   #", "#   #", "#### ", "#    ", "#    ", "#    "}},
    {'Q', {" ### ", "#   #", "#   #", "#   #", "# # #", "#  # ", " ## #"}},
    {'R', {"#### ", "#   #", "#   #", "#### ", "# #  ", "#  # ", "#   #"}},
    {'S', {" ####", "#    ", "#    ", " ### ", "    #", "    #", "#### "}},
    {'T', {"#####", "  #  ", "  #  ", "  #  ", "  #  ", "  #  ", "  #  "}},
    {'U', {"#   #", "#   #", "#   #", "#   #", "#   #", "#   #", " ### "}},
    {'V', {"#   #", "#   #", "#   #", "#   #", "#   #", " # # ", "  #  "}},
    {'W', {"#   #", "#   #", "#   #", "# # #", "# # #", "## ##", "#   #"}},
    {'X', {"#   #", "#   #", " # # ", "  #  ", " # # ", "#   #", "#   #"}},
    {'Y', {"#   #", "#   #", " # # ", "  #  ", "  #  ", "  #  ", "  #  "}},
    {'Z', {"#####", "    #", "   # ", "  #  ", " #   ", "#    ", "#####"}},
    {'0', {" ### ", "#   #", "#  ##", "# # #", "##  #", "#   #", " ### "}},
    {'1', {"  #  ", " ##  ", "  #  ", "  #  ", "  #  ", "  #  ", " ### "}},
    {'2', {" ### ", "#   #", "    #", "   # ", "  #  ", " #   ", "#####"}},
    {'3', {" ### ", "#   #", "    #", "  ## ", "    #", "#   #", " ### "}},
    {'4', {"   # ", "  ## ", " # # ", "#  # ", "#####", "   # ", "   # "}},
    {'5', {"#####", "#    ", "#### ", "    #", "    #", "#   #", " ### "}},
    {'6', {" ### ", "#    ", "#    ", "#### ", "#   #", "#   #", " ### "}},
    {'7', {"#####", "    #", "   # ", "  #  ", " #   ", " #   ", " #   "}},
    {'8', {" ### ", "#   #", "#   #", " ### ", "#   #", "#   #", " ### "}},
    {'9', {" ### ", "#   #", "#   #", " ####", "    #", "    #", " ### "}},
};

const Glyph* find_glyph(char ch) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const Glyph& g : kGlyphs)
        if (g.ch == up) return &g;
    return nullptr;
}

// Stamps text with its top-left corner at (x0,y0); pixels outside the
// raster are dropped.
void draw_text(Raster& img, const std::string& text, int x0, int y0, int scale,
               const SrgbColor& color) {
    int pen = x0;
    for (char ch : text) {
        const Glyph* glyph = find_glyph(ch);
        if (glyph != nullptr) {
            for (int row = 0; row < 7; ++row) {
                for (int col = 0; col < 5; ++col) {
                    if (glyph->rows[row][col] != '#') continue;
                    for (int dy = 0; dy < scale; ++dy) {
                        for (int dx = 0; dx < scale; ++dx) {
                            const int x = pen + col * scale + dx;
                            const int y = y0 + row * scale + dy;
                            if (x < 0 || y < 0 || x >= img.width || y >= img.height) continue;
                            img.at(x, y) = color;
                            if (img.has_alpha()) img.alpha[img.index(x, y)] = 1.0;
                        }
                    }
                }
            }
        }
        pen += 6 * scale;  // 5 columns + 1 gap
    }
}

int text_width(const std::string& text, int scale) {
    return text.empty() ? 0 : (static_cast<int>(text.size()) * 6 - 1) * scale;
}

} // namespace

Raster render_wheel_legend(const WheelSpec& spec, int size_px, LegendBackground background) {
    validate_size(size_px);
    Raster img(size_px, size_px);
    const bool transparent = background == LegendBackground::Transparent;
    if (transparent) img.alpha.assign(img.pixels.size(), 0.0);

    const double center = (size_px - 1) / 2.0;
    const double radius = (size_px - 1) / 2.0;
    const long n = static_cast<long>(img.pixels.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const int x = static_cast<int>(i % size_px);
        const int y = static_cast<int>(i / size_px);
        const double dx = x - center;
        const double dy = center - y;
        const double r = std::hypot(dx, dy);
        if (r <= radius) {
            const LabColor lab = wheel_color(std::atan2(dy, dx), r / radius, spec);
            img.pixels[i] = lab_to_srgb(lab, GamutPolicy::Clip);
            if (transparent) img.alpha[i] = 1.0;
        } else {
            img.pixels[i] = {1.0, 1.0, 1.0};
        }
    }
    return img;
}

TriangleLegendGeometry triangle_legend_geometry(int size_px) {
    validate_size(size_px);
    // Equilateral triangle, apex up, centered horizontally, with a margin
    // wide enough for the vertex labels.
    const double margin = 0.12 * size_px;
    const double side = size_px - 2.0 * margin;
    const double height = side * std::sqrt(3.0) / 2.0;
    const double top = (size_px - height) / 2.0;
    TriangleLegendGeometry g{};
    g.x1 = size_px / 2.0;
    g.y1 = top;
    g.x2 = margin;
    g.y2 = top + height;
    g.x3 = size_px - margin;
    g.y3 = top + height;
    return g;
}

Raster render_triangle_legend(const TriangleSpec& spec,
                              const std::array<std::string, 3>& labels, int size_px,
                              LegendBackground background) {
    validate_size(size_px);
    Raster img(size_px, size_px);
    const bool transparent = background == LegendBackground::Transparent;
    if (transparent) img.alpha.assign(img.pixels.size(), 0.0);

    const TriangleLegendGeometry g = triangle_legend_geometry(size_px);
    // Barycentric coordinates via the inverse of the edge matrix.
    const double m00 = g.x1 - g.x3, m01 = g.x2 - g.x3;
    const double m10 = g.y1 - g.y3, m11 = g.y2 - g.y3;
    const double det = m00 * m11 - m01 * m10;

    const long n = static_cast<long>(img.pixels.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const int x = static_cast<int>(i % size_px);
        const int y = static_cast<int>(i / size_px);
        const double px = x - g.x3;
        const double py = y - g.y3;
        const double w1 = (m11 * px - m01 * py) / det;
        const double w2 = (-m10 * px + m00 * py) / det;
        const double w3 = 1.0 - w1 - w2;
        if (w1 >= 0.0 && w2 >= 0.0 && w3 >= 0.0) {
            const LabColor lab = composition_color(w1, w2, w3, 1.0, spec);
            img.pixels[i] = lab_to_srgb(lab, GamutPolicy::Compress);
            if (transparent) img.alpha[i] = 1.0;
        } else {
            img.pixels[i] = {1.0, 1.0, 1.0};
        }
    }

    const int scale = std::max(1, size_px / 160);
    const SrgbColor ink{0.0, 0.0, 0.0};
    const int th = 7 * scale;
    draw_text(img, labels[0], static_cast<int>(g.x1 - text_width(labels[0], scale) / 2.0),
              static_cast<int>(g.y1) - th - 2 * scale, scale, ink);
    draw_text(img, labels[1], static_cast<int>(g.x2 - text_width(labels[1], scale) / 2.0),
              static_cast<int>(g.y2) + 2 * scale, scale, ink);
    draw_text(img, labels[2], static_cast<int>(g.x3 - text_width(labels[2], scale) / 2.0),
              static_cast<int>(g.y3) + 2 * scale, scale, ink);
    return img;
}

} // namespace puviz
