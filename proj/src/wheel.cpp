#include "puviz/wheel.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "puviz/errors.hpp"
#include "puviz/json_util.hpp"
#include "puviz/parallel.hpp"

namespace puviz {

namespace {

void validate_field(const VectorField2D& field) {
    if (field.width < 1 || field.height < 1)
        throw InvalidInputError("vector field dimensions must be positive");
    if (field.data.size() != 2 * static_cast<std::size_t>(field.width) * field.height)
        throw InvalidInputError("vector field data length does not match width*height");
}

void validate_magnitude(double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw InvalidInputError("magnitude must lie in [0,1]");
}

double resolve_vmax(const VectorField2D& field, std::optional<double> vmax) {
    if (vmax.has_value()) {
        if (!(*vmax > 0.0)) throw InvalidInputError("vmax must be positive");
        return *vmax;
    }
    const long n = static_cast<long>(field.width) * field.height;
    double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        best = std::max(best, std::hypot(static_cast<double>(field.data[2 * i]),
                                         static_cast<double>(field.data[2 * i + 1])));
    }
    if (best == 0.0)
        throw InvalidInputError("auto vmax is undefined for an all-zero field");
    return best;
}

} // namespace

LabColor wheel_color(double theta_rad, double magnitude, const WheelSpec& spec) {
    validate_magnitude(magnitude);
    const double hue = wrap_degrees(spec.hue_offset_deg + degrees(theta_rad));
    return lch_to_lab({magnitude * spec.l_max, magnitude * spec.c_max, hue});
}

SrgbColor hsv_wheel_color(double theta_rad, double magnitude) {
    validate_magnitude(magnitude);
    return hsv_to_srgb({wrap_degrees(degrees(theta_rad)), 1.0, magnitude});
}

RenderResult map_vector_field(const VectorField2D& field, const WheelSpec& spec,
                              std::optional<double> vmax, GamutPolicy policy) {
    validate_field(field);
    const double scale = resolve_vmax(field, vmax);
    const long n = static_cast<long>(field.width) * field.height;

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = scale;
    long adjusted = 0;
    long first_bad = LONG_MAX;  // GamutError must not escape the parallel region

#pragma omp parallel for schedule(static) reduction(+ : adjusted) reduction(min : first_bad) \
    num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const double vx = field.data[2 * i];
        const double vy = field.data[2 * i + 1];
        const double m = std::min(std::hypot(vx, vy) / scale, 1.0);
        const LabColor lab = wheel_color(std::atan2(vy, vx), m, spec);
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
        const double vx = field.data[2 * first_bad];
        const double vy = field.data[2 * first_bad + 1];
        const double m = std::min(std::hypot(vx, vy) / scale, 1.0);
        const LabColor lab = wheel_color(std::atan2(vy, vx), m, spec);
        throw GamutError("map_vector_field pixel " + std::to_string(first_bad), lab,
                         lab_to_srgb_exact(lab));
    }
    out.adjusted_pixels = adjusted;
    return out;
}

RenderResult map_vector_field_hsv(const VectorField2D& field, std::optional<double> vmax) {
    validate_field(field);
    const double scale = resolve_vmax(field, vmax);
    const long n = static_cast<long>(field.width) * field.height;

    RenderResult out;
    out.image = Raster(field.width, field.height);
    out.scale_used = scale;
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const double vx = field.data[2 * i];
        const double vy = field.data[2 * i + 1];
        const double m = std::min(std::hypot(vx, vy) / scale, 1.0);
        out.image.pixels[i] = hsv_wheel_color(std::atan2(vy, vx), m);
    }
    return out;
}

WheelAnalysis analyze_wheel(WheelKind kind, double magnitude, int steps, double jnd,
                            const WheelSpec& spec) {
    if (steps < 360) throw InvalidInputError("analyze_wheel: steps must be at least 360");
    if (!(jnd > 0.0)) throw InvalidInputError("analyze_wheel: jnd must be positive");
    if (magnitude == 0.0)
        throw DegenerateError("analyze_wheel: all colors coincide at zero magnitude");
    validate_magnitude(magnitude);

    const double step_deg = 360.0 / steps;
    std::vector<LabColor> labs(steps);
    WheelAnalysis a;
    a.jnd = jnd;
    a.angles_deg.resize(steps);
    a.de_per_deg.resize(steps);
    a.lightness.resize(steps);

#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < steps; ++i) {
        const double theta = radians(i * step_deg);
        labs[i] = kind == WheelKind::PerceptuallyUniform
                      ? wheel_color(theta, magnitude, spec)
                      : srgb_to_lab(hsv_wheel_color(theta, magnitude));
        a.angles_deg[i] = i * step_deg;
        a.lightness[i] = labs[i].L;
    }
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < steps; ++i) {
        const LabColor& prev = labs[(i + steps - 1) % steps];
        const LabColor& next = labs[(i + 1) % steps];
        a.de_per_deg[i] = delta_e(next, prev) / (2.0 * step_deg);
    }

    const double lowest = *std::min_element(a.de_per_deg.begin(), a.de_per_deg.end());
    if (!(lowest > 0.0))
        throw DegenerateError("analyze_wheel: derivative vanishes, wheel is degenerate");
    a.min_discernible_angle_deg = jnd / lowest;
    return a;
}

nlohmann::json to_json(const WheelAnalysis& analysis) {
    nlohmann::json j;
    j["angles_deg"] = json_array(analysis.angles_deg);
    j["dE_per_deg"] = json_array(analysis.de_per_deg);
    j["lightness"] = json_array(analysis.lightness);
    j["min_discernible_angle_deg"] = round_sig(analysis.min_discernible_angle_deg);
    j["jnd"] = round_sig(analysis.jnd);
    return j;
}

} // namespace puviz
