#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "puviz/colorspace.hpp"

namespace puviz {

// A scalar colormap: ordered sRGB samples at uniform parameter spacing
// t in [0,1].
struct Colormap {
    std::string name;
    std::vector<SrgbColor> entries;
};

// Quantitative quality report. dE_profile is CIE76 per unit t between
// adjacent samples, so a perfectly uniform map has a flat profile and
// arc_length equals the profile mean.
struct LintReport {
    double arc_length = 0.0;
    std::vector<double> de_profile;
    std::vector<double> lightness_profile;
    bool lightness_monotonic = false;
    double uniformity_cv = 0.0;        // coefficient of variation of de_profile
    double min_perceivable_step = 0.0; // jnd / max(de_profile); NaN when degenerate
    bool degenerate = false;           // zero arc length
    double jnd = kJustNoticeableDeltaE;
};

LintReport lint_colormap(const Colormap& cmap, double jnd = kJustNoticeableDeltaE);

// arc_length(a) / arc_length(b); throws DegenerateError when b has zero length.
double contrast_ratio(const Colormap& a, const Colormap& b);

// Reads rows of "r,g,b" floats in [0,1]; '#' lines are comments. The name
// defaults to the file stem.
Colormap load_colormap_csv(const std::string& path, std::string name = "");

// A fresh colormap of `samples` entries linearly interpolated (in sRGB)
// between uniformly spaced positions of `cmap`.
Colormap resample_colormap(const Colormap& cmap, int samples);

nlohmann::json to_json(const LintReport& report);

} // namespace puviz
