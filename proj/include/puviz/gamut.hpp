#pragma once

#include <json.hpp>

#include "puviz/colorspace.hpp"

namespace puviz {

// Largest white-centered equilateral triangle inscribed in the gamut at
// fixed lightness: vertices at chroma R and hues hue_deg + {0,120,240}.
struct TriangleSolution {
    double L = 0.0;
    double R = 0.0;
    double hue_deg = 0.0;
};

nlohmann::json to_json(const TriangleSolution& s);

// True iff the exact Lab -> sRGB chain lands within [-eps, 1+eps] per channel.
bool in_gamut(const LabColor& c, double eps);

// Largest chroma at (lightness, hue) that stays displayable. Bisection on
// [0,200] to 1e-3 absolute; returns the in-gamut end of the final bracket.
double max_chroma(double lightness, double hue_deg);

// min over sampled hues of max_chroma; hue_step_deg must be <= 0.25.
double max_inscribed_circle(double lightness, double hue_step_deg = 0.25);

// Maximizes R over lightness in [l_min,l_max] and rotation in [0,120) such
// that all three vertices stay in gamut. Coarse-to-fine grid refinement
// (1.0 -> 0.25 -> requested step); ties resolve toward lower L, then lower
// hue. Steps must be <= 0.25.
TriangleSolution find_composition_triangle(double l_min, double l_max,
                                           double l_step = 0.05,
                                           double h_step = 0.05);

} // namespace puviz
