#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "puviz/colorspace.hpp"
#include "puviz/raster.hpp"

namespace puviz {

// Three co-registered non-negative channels (counts or concentrations),
// one plane per component, row-major.
struct CompositionField {
    int width = 0;
    int height = 0;
    std::array<std::vector<float>, 3> channels;
    std::array<std::string, 3> labels{"ch1", "ch2", "ch3"};

    double value(int channel, int x, int y) const {
        return channels[channel][static_cast<std::size_t>(y) * width + x];
    }
};

// Inverted trigonal pyramid: total intensity -> lightness and circumradius,
// relative composition -> barycentric position between three vertices at
// hues h0 + {0,120,240}. Defaults are the largest white-centered triangle
// inscribed in the sRGB gamut.
struct TriangleSpec {
    double l_max = 61.50;
    double r_max = 60.14;
    double h0_deg = 33.73;
};

// I = min((c1+c2+c3)/c_total_max, 1); L = I*l_max; (a,b) = barycentric mix
// of the vertex directions at radius I*r_max. Weights default to equal
// thirds at zero total (harmless: I = 0 forces black).
LabColor composition_color(double c1, double c2, double c3, double c_total_max,
                           const TriangleSpec& spec = {});

// The traditional reference: each channel independently normalized onto
// one sRGB primary.
SrgbColor rgb_mixing_color(double c1, double c2, double c3,
                           double m1, double m2, double m3);

// Renders a composition field through the pyramid. c_total_max = nullopt
// picks the maximum per-pixel total.
RenderResult map_composition_field(const CompositionField& field, const TriangleSpec& spec,
                                   std::optional<double> c_total_max, GamutPolicy policy);

// R-G-B mixing reference image; channels normalized per-channel to their
// field maxima (all-zero channels stay zero).
RenderResult map_composition_field_rgb(const CompositionField& field);

// Column-wise means of each channel over rows [row_start, row_start+row_count).
std::array<std::vector<double>, 3> row_profile(const CompositionField& field,
                                               int row_start, int row_count);

// CSV with header "col,<label1>,<label2>,<label3>", one row per column.
void write_profile_csv(std::ostream& out, const CompositionField& field,
                       const std::array<std::vector<double>, 3>& profile);

} // namespace puviz
