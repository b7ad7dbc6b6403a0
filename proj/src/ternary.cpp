#include "puviz/ternary.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>

#include "puviz/errors.hpp"
#include "puviz/parallel.hpp"

namespace puviz {

namespace {

void validate_field(const CompositionField& field) {
    if (field.width < 1 || field.height < 1)
        throw InvalidInputError("composition field dimensions must be positive");
    const auto expected = static_cast<std::size_t>(field.width) * field.height;
    for (const auto& plane : field.channels)
        if (plane.size() != expected)
            throw InvalidInputError("composition channel length does not match width*height");
}

void validate_components(double c1, double c2, double c3) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3))
        throw InvalidInputError("composition components must be finite");
    if (c1 < 0.0 || c2 < 0.0 || c3 < 0.0)
        throw InvalidInputError("composition components must be non-negative");
}

double resolve_total_max(const CompositionField& field, std::optional<double> c_total_max) {
    if (c_total_max.has_value()) {
        if (!(*c_total_max > 0.0)) throw InvalidInputError("c_total_max must be positive");
        return *c_total_max;
    }
    const long n = static_cast<long>(field.width) * field.height;
    double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const double total = static_cast<double>(field.channels[0][i]) +
                             field.channels[1][i] + field.channels[2][i];
        best = std::max(best, total);
    }
    if (best == 0.0)
        throw InvalidInputError("auto c_total_max is undefined for an all-zero field");
    return best;
}

} // namespace

LabColor composition_color(double c1, double c2, double c3, double c_total_max,
                           const TriangleSpec& spec) {
    validate_components(c1, c2, c3);
    if (!(c_total_max > 0.0)) throw InvalidInputError("c_total_max must be positive");

    const double total = c1 + c2 + c3;
    const double intensity = std::min(total / c_total_max, 1.0);
    const double w1 = total > 0.0 ? c1 / total : 1.0 / 3.0;
    const double w2 = total > 0.0 ? c2 / total : 1.0 / 3.0;
    const double w3 = total > 0.0 ? c3 / total : 1.0 / 3.0;

    const double h1 = radians(spec.h0_deg);
    const double h2 = radians(spec.h0_deg + 120.0);
    const double h3 = radians(spec.h0_deg + 240.0);
    const double a = w1 * std::cos(h1) + w2 * std::cos(h2) + w3 * std::cos(h3);
    const double b = w1 * std::sin(h1) + w2 * std::sin(h2) + w3 * std::sin(h3);
    return {intensity * spec.l_max, intensity * spec.r_max * a, intensity * spec.r_max * b};
}

SrgbColor rgb_mixing_color(double c1, double c2, double c3,
                           double m1, double m2, double m3) {
    validate_components(c1, c2, c3);
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(m3 > 0.0))
        throw InvalidInputError("per-channel maxima must be positive");
    return {std::min(c1 / m1, 1.0), std::min(c2 / m2, 1.0), std::min(c3 / m3, 1.0)};
}

RenderResult map_composition_field(const CompositionField& field, const TriangleSpec& spec,
                                   std::optional<double> c_total_max, GamutPolicy policy) {
    validate_field(field);
    const double scale = resolve_total_max(field, c_total_max);
    const long n = static_cast<long>(field.width) * field.height;

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = scale;
    long adjusted = 0;
    long first_bad = LONG_MAX;

#pragma omp parallel for schedule(static) reduction(+ : adjusted) reduction(min : first_bad) \
    num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const LabColor lab = composition_color(field.channels[0][i], field.channels[1][i],
                                               field.channels[2][i], scale, spec);
        const SrgbColor exact = lab_to_srgb_exact(lab);
        if (srgb_in_unit_range(exact)) {
            out.image.pixels[i] = exact;
        } else if (policy == GamutPolicy::Clip) {
            out.image.pixels[i] = clamp_to_unit(exact);
            ++adjusted;
        } else if (policy == GamutPolicy::Compress) {
            out.image.pixels[i] = compress_chroma(lab);
            ++adjusted;
        } else {
            first_bad = std::min(first_bad, i);
            out.image.pixels[i] = clamp_to_unit(exact);
        }
    }
    if (policy == GamutPolicy::Error && first_bad != LONG_MAX) {
        const LabColor lab =
            composition_color(field.channels[0][first_bad], field.channels[1][first_bad],
                              field.channels[2][first_bad], scale, spec);
        throw GamutError("map_composition_field pixel " + std::to_string(first_bad), lab,
                         lab_to_srgb_exact(lab));
    }
    out.adjusted_pixels = adjusted;
    return out;
}

RenderResult map_composition_field_rgb(const CompositionField& field) {
    validate_field(field);
    const long n = static_cast<long>(field.width) * field.height;

    double maxima[3] = {0.0, 0.0, 0.0};
    for (int ch = 0; ch < 3; ++ch) {
        double best = 0.0;
        const auto& plane = field.channels[ch];
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(worker_count())
        for (long i = 0; i < n; ++i) best = std::max(best, static_cast<double>(plane[i]));
        maxima[ch] = best > 0.0 ? best : 1.0;
    }

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = std::max({maxima[0], maxima[1], maxima[2]});
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        out.image.pixels[i] = rgb_mixing_color(field.channels[0][i], field.channels[1][i],
                                               field.channels[2][i], maxima[0], maxima[1],
                                               maxima[2]);
    }
    return out;
}

std::array<std::vector<double>, 3> row_profile(const CompositionField& field,
                                               int row_start, int row_count) {
    validate_field(field);
    if (row_count < 1) throw InvalidInputError("row_profile: row_count must be at least 1");
    if (row_start < 0 || row_start + row_count > field.height)
        throw InvalidInputError("row_profile: rows [" + std::to_string(row_start) + ", " +
                                std::to_string(row_start + row_count) + ") outside field height " +
                                std::to_string(field.height));

    std::array<std::vector<double>, 3> profile;
    for (auto& p : profile) p.assign(field.width, 0.0);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int x = 0; x < field.width; ++x) {
        for (int ch = 0; ch < 3; ++ch) {
            double sum = 0.0;
            for (int y = row_start; y < row_start + row_count; ++y)
                sum += field.value(ch, x, y);
            profile[ch][x] = sum / row_count;
        }
    }
    return profile;
}

void write_profile_csv(std::ostream& out, const CompositionField& field,
                       const std::array<std::vector<double>, 3>& profile) {
    out << "col," << field.labels[0] << ',' << field.labels[1] << ',' << field.labels[2] << '\n';
    char buf[96];
    for (std::size_t x = 0; x < profile[0].size(); ++x) {
        std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g,%.9g\n", x, profile[0][x], profile[1][x],
                      profile[2][x]);
        out << buf;
    }
}

} // namespace puviz
