#include "puviz/cmap_lint.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include "puviz/errors.hpp"
#include "puviz/field_io.hpp"
#include "puviz/json_util.hpp"

namespace puviz {

namespace {

double arc_length_of(const Colormap& cmap) {
    double arc = 0.0;
    for (std::size_t i = 0; i + 1 < cmap.entries.size(); ++i)
        arc += delta_e(srgb_to_lab(cmap.entries[i]), srgb_to_lab(cmap.entries[i + 1]));
    return arc;
}

} // namespace

LintReport lint_colormap(const Colormap& cmap, double jnd) {
    if (cmap.entries.size() < 2)
        throw InvalidInputError("lint_colormap: need at least 2 entries, got " +
                                std::to_string(cmap.entries.size()));
    if (!(jnd > 0.0)) throw InvalidInputError("lint_colormap: jnd must be positive");

    const std::size_t n = cmap.entries.size();
    const double dt = 1.0 / static_cast<double>(n - 1);

    std::vector<LabColor> labs(n);
    for (std::size_t i = 0; i < n; ++i) labs[i] = srgb_to_lab(cmap.entries[i]);

    LintReport report;
    report.jnd = jnd;
    report.de_profile.resize(n - 1);
    report.lightness_profile.resize(n);
    for (std::size_t i = 0; i < n; ++i) report.lightness_profile[i] = labs[i].L;

    double arc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double de = delta_e(labs[i], labs[i + 1]);
        arc += de;
        report.de_profile[i] = de / dt;
    }
    report.arc_length = arc;
    report.degenerate = arc == 0.0;

    // Monotone up to a 1e-9 slack against floating-point jitter.
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double diff = labs[i + 1].L - labs[i].L;
        up = up && diff >= -1e-9;
        down = down && diff <= 1e-9;
    }
    report.lightness_monotonic = up || down;

    const double mean = arc;  // sum(profile)/(n-1) = arc since dt*(n-1) = 1
    if (report.degenerate) {
        report.uniformity_cv = 0.0;
        report.min_perceivable_step = std::numeric_limits<double>::quiet_NaN();
    } else {
        double var = 0.0;
        for (double v : report.de_profile) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n - 1);
        report.uniformity_cv = std::sqrt(var) / mean;
        const double peak = *std::max_element(report.de_profile.begin(), report.de_profile.end());
        report.min_perceivable_step = jnd / peak;
    }
    return report;
}

double contrast_ratio(const Colormap& a, const Colormap& b) {
    if (a.entries.size() < 2 || b.entries.size() < 2)
        throw InvalidInputError("contrast_ratio: both colormaps need at least 2 entries");
    const double arc_b = arc_length_of(b);
    if (arc_b == 0.0)
        throw DegenerateError("contrast_ratio: denominator colormap has zero arc length");
    return arc_length_of(a) / arc_b;
}

Colormap load_colormap_csv(const std::string& path, std::string name) {
    const Grid2D grid = load_csv_channel(path);
    if (grid.width != 3)
        throw LoadError("'" + path + "': colormap CSV needs exactly 3 columns, got " +
                        std::to_string(grid.width));
    Colormap cmap;
    cmap.name = name.empty() ? std::filesystem::path(path).stem().string() : std::move(name);
    cmap.entries.resize(grid.height);
    for (int i = 0; i < grid.height; ++i) {
        const SrgbColor c{grid.values[3 * i], grid.values[3 * i + 1], grid.values[3 * i + 2]};
        if (!srgb_in_unit_range(c, 1e-9))
            throw LoadError("'" + path + "': row " + std::to_string(i + 1) +
                            " is outside [0,1], colormap entries must be in gamut");
        cmap.entries[i] = c;
    }
    return cmap;
}

Colormap resample_colormap(const Colormap& cmap, int samples) {
    if (cmap.entries.size() < 2)
        throw InvalidInputError("resample_colormap: need at least 2 entries");
    if (samples < 2) throw InvalidInputError("resample_colormap: need at least 2 samples");
    Colormap out;
    out.name = cmap.name;
    out.entries.resize(samples);
    const double last = static_cast<double>(cmap.entries.size() - 1);
    for (int i = 0; i < samples; ++i) {
        const double pos = last * i / (samples - 1);
        const std::size_t lo = std::min(static_cast<std::size_t>(pos), cmap.entries.size() - 2);
        const double f = pos - static_cast<double>(lo);
        const SrgbColor& a = cmap.entries[lo];
        const SrgbColor& b = cmap.entries[lo + 1];
        out.entries[i] = {a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)};
    }
    return out;
}

nlohmann::json to_json(const LintReport& report) {
    nlohmann::json j;
    j["arc_length"] = round_sig(report.arc_length);
    j["dE_profile"] = json_array(report.de_profile);
    j["lightness_profile"] = json_array(report.lightness_profile);
    j["lightness_monotonic"] = report.lightness_monotonic;
    j["uniformity_cv"] = round_sig(report.uniformity_cv);
    j["min_perceivable_step"] = std::isfinite(report.min_perceivable_step)
                                    ? nlohmann::json(round_sig(report.min_perceivable_step))
                                    : nlohmann::json(nullptr);
    j["degenerate"] = report.degenerate;
    j["jnd"] = round_sig(report.jnd);
    return j;
}

} // namespace puviz
