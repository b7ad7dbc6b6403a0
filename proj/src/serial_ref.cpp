#include "puviz/serial_ref.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "puviz/errors.hpp"
#include "puviz/gamut.hpp"

namespace puviz::serial {

namespace {

SrgbColor resolve_policy(const LabColor& lab, GamutPolicy policy, const std::string& context,
                         long* adjusted) {
    const SrgbColor exact = lab_to_srgb_exact(lab);
    if (srgb_in_unit_range(exact)) return exact;
    switch (policy) {
        case GamutPolicy::Clip:
            ++*adjusted;
            return clamp_to_unit(exact);
        case GamutPolicy::Compress:
            ++*adjusted;
            return compress_chroma(lab);
        case GamutPolicy::Error:
            break;
    }
    throw GamutError(context, lab, exact);
}

} // namespace

RenderResult map_vector_field(const VectorField2D& field, const WheelSpec& spec,
                              std::optional<double> vmax, GamutPolicy policy) {
    if (field.width < 1 || field.height < 1 ||
        field.data.size() != 2 * static_cast<std::size_t>(field.width) * field.height)
        throw InvalidInputError("vector field dimensions must match the data length");

    double scale = 0.0;
    if (vmax.has_value()) {
        if (!(*vmax > 0.0)) throw InvalidInputError("vmax must be positive");
        scale = *vmax;
    } else {
        for (std::size_t i = 0; i < field.data.size() / 2; ++i)
            scale = std::max(scale, std::hypot(static_cast<double>(field.data[2 * i]),
                                               static_cast<double>(field.data[2 * i + 1])));
        if (scale == 0.0)
            throw InvalidInputError("auto vmax is undefined for an all-zero field");
    }

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = scale;
    for (std::size_t i = 0; i < out.image.pixels.size(); ++i) {
        const double vx = field.data[2 * i];
        const double vy = field.data[2 * i + 1];
        const double m = std::min(std::hypot(vx, vy) / scale, 1.0);
        const LabColor lab = wheel_color(std::atan2(vy, vx), m, spec);
        out.image.pixels[i] = resolve_policy(lab, policy, "map_vector_field pixel " +
                                                              std::to_string(i),
                                             &out.adjusted_pixels);
    }
    return out;
}

RenderResult map_composition_field(const CompositionField& field, const TriangleSpec& spec,
                                   std::optional<double> c_total_max, GamutPolicy policy) {
    const auto expected = static_cast<std::size_t>(field.width) * field.height;
    if (field.width < 1 || field.height < 1 || field.channels[0].size() != expected ||
        field.channels[1].size() != expected || field.channels[2].size() != expected)
        throw InvalidInputError("composition field dimensions must match the data length");

    double scale = 0.0;
    if (c_total_max.has_value()) {
        if (!(*c_total_max > 0.0)) throw InvalidInputError("c_total_max must be positive");
        scale = *c_total_max;
    } else {
        for (std::size_t i = 0; i < expected; ++i)
            scale = std::max(scale, static_cast<double>(field.channels[0][i]) +
                                        field.channels[1][i] + field.channels[2][i]);
        if (scale == 0.0)
            throw InvalidInputError("auto c_total_max is undefined for an all-zero field");
    }

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = scale;
    for (std::size_t i = 0; i < expected; ++i) {
        const LabColor lab = composition_color(field.channels[0][i], field.channels[1][i],
                                               field.channels[2][i], scale, spec);
        out.image.pixels[i] = resolve_policy(lab, policy, "map_composition_field pixel " +
                                                              std::to_string(i),
                                             &out.adjusted_pixels);
    }
    return out;
}

Raster simulate_cvd(const Raster& image, const CvdModel& model) {
    const CvdMatrix m = cvd_matrix(model);
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        const SrgbColor& p = image.pixels[i];
        const double lr = srgb_decode(p.r);
        const double lg = srgb_decode(p.g);
        const double lb = srgb_decode(p.b);
        out.pixels[i] = clamp_to_unit({
            srgb_encode(m[0][0] * lr + m[0][1] * lg + m[0][2] * lb),
            srgb_encode(m[1][0] * lr + m[1][1] * lg + m[1][2] * lb),
            srgb_encode(m[2][0] * lr + m[2][1] * lg + m[2][2] * lb),
        });
    }
    return out;
}

Raster desaturate(const Raster& image) {
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        LabColor lab = srgb_to_lab(image.pixels[i]);
        lab.a = 0.0;
        lab.b = 0.0;
        out.pixels[i] = lab_to_srgb(lab, GamutPolicy::Clip);
    }
    return out;
}

Raster flatten_lightness(const Raster& image, double l0) {
    if (!(l0 >= 0.0 && l0 <= 100.0))
        throw InvalidInputError("flatten_lightness: l0 must lie in [0,100]");
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        LabColor lab = srgb_to_lab(image.pixels[i]);
        lab.L = l0;
        out.pixels[i] = lab_to_srgb(lab, GamutPolicy::Compress);
    }
    return out;
}

double max_inscribed_circle(double lightness, double hue_step_deg) {
    if (!(lightness >= 0.0 && lightness <= 100.0))
        throw InvalidInputError("max_inscribed_circle: lightness must lie in [0,100]");
    if (!(hue_step_deg > 0.0 && hue_step_deg <= 0.25))
        throw InvalidInputError("max_inscribed_circle: hue step must lie in (0, 0.25] degrees");
    const long samples = static_cast<long>(std::ceil(360.0 / hue_step_deg));
    double smallest = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i)
        smallest = std::min(smallest, max_chroma(lightness, i * hue_step_deg));
    return smallest;
}

} // namespace puviz::serial
