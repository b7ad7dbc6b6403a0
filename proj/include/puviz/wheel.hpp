#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "puviz/colorspace.hpp"
#include "puviz/raster.hpp"

namespace puviz {

// Row-major grid of interleaved (vx, vy) pairs in arbitrary but uniform
// physical units.
struct VectorField2D {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // size = 2 * width * height

    double vx(int x, int y) const { return data[2 * (static_cast<std::size_t>(y) * width + x)]; }
    double vy(int x, int y) const { return data[2 * (static_cast<std::size_t>(y) * width + x) + 1]; }
};

// Cone geometry for the uniform wheel: vector angle -> hue, magnitude ->
// lightness and chroma, counterclockwise. Defaults put the cone base at
// L=74 with radius 40; the hue origin sits on the sRGB red primary (whose
// CIELAB hue is 40.0 degrees) so theta = 0 reads as red like the HSV wheel.
struct WheelSpec {
    double l_max = 74.0;
    double c_max = 40.0;
    double hue_offset_deg = 40.0;
};

// Point on the cone: L = m*l_max, C = m*c_max, h = hue_offset + theta.
LabColor wheel_color(double theta_rad, double magnitude, const WheelSpec& spec = {});

// The reference HSV wheel: h = theta, s = 1, v = m.
SrgbColor hsv_wheel_color(double theta_rad, double magnitude);

// Renders a field through the uniform wheel. vmax = nullopt picks the field
// maximum magnitude; magnitudes above vmax saturate to the cone base.
RenderResult map_vector_field(const VectorField2D& field, const WheelSpec& spec,
                              std::optional<double> vmax, GamutPolicy policy);

// Same field through the HSV reference wheel.
RenderResult map_vector_field_hsv(const VectorField2D& field, std::optional<double> vmax);

enum class WheelKind { PerceptuallyUniform, Hsv };

// Perceptual derivative of a wheel with respect to angle, sampled at a
// fixed magnitude. Derivatives are CIE76 per degree via central differences
// so the uniform and HSV wheels share one code path.
struct WheelAnalysis {
    std::vector<double> angles_deg;
    std::vector<double> de_per_deg;
    std::vector<double> lightness;
    double min_discernible_angle_deg = 0.0;
    double jnd = kJustNoticeableDeltaE;
};

WheelAnalysis analyze_wheel(WheelKind kind, double magnitude, int steps,
                            double jnd = kJustNoticeableDeltaE,
                            const WheelSpec& spec = {});

nlohmann::json to_json(const WheelAnalysis& analysis);

} // namespace puviz
