#pragma once

#include <string>

namespace puviz {

// Display color, nonlinear sRGB channels. In gamut iff every channel lies
// in [0,1] (tolerance 1e-9); values outside that range are meaningful as
// intermediate results of the conversion chain.
struct SrgbColor {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

// CIELAB under the D65 white point and 2-degree observer. L spans [0,100]
// for displayable colors; a and b are unbounded in principle. The neutral
// axis is a = b = 0.
struct LabColor {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Cylindrical CIELAB: C = sqrt(a^2+b^2), h = atan2(b,a) in degrees,
// normalized to [0,360). Convention: h = 0 when C = 0.
struct LchColor {
    double L = 0.0;
    double C = 0.0;
    double h = 0.0;
};

// Standard hexcone HSV; h in degrees, s and v in [0,1].
struct HsvColor {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
};

// What lab_to_srgb does when the exact conversion leaves [0,1]^3.
enum class GamutPolicy {
    Error,     // reject with GamutError
    Clip,      // clamp channels to [0,1]
    Compress,  // shrink chroma at fixed L and h until displayable
};

GamutPolicy parse_gamut_policy(const std::string& name);
const char* to_string(GamutPolicy policy);

// D65 reference white (2-degree observer), Y normalized to 1.
inline constexpr double kWhiteX = 0.95047;
inline constexpr double kWhiteY = 1.00000;
inline constexpr double kWhiteZ = 1.08883;

// Default just-noticeable difference in CIE76 units.
inline constexpr double kJustNoticeableDeltaE = 2.3;

constexpr double degrees(double radians) { return radians * (180.0 / 3.141592653589793238462643383279502884); }
constexpr double radians(double degrees) { return degrees * (3.141592653589793238462643383279502884 / 180.0); }

// Normalizes an angle in degrees to [0,360).
double wrap_degrees(double h);

// sRGB transfer function, extended to negative inputs by odd symmetry so
// out-of-gamut intermediates stay representable.
double srgb_decode(double encoded);
double srgb_encode(double linear);

LabColor srgb_to_lab(const SrgbColor& c);

// Full inverse chain with no gamut handling; channels may leave [0,1].
SrgbColor lab_to_srgb_exact(const LabColor& c);

SrgbColor lab_to_srgb(const LabColor& c, GamutPolicy policy);

// True iff every channel lies in [-eps, 1+eps].
bool srgb_in_unit_range(const SrgbColor& c, double eps = 1e-9);

SrgbColor clamp_to_unit(const SrgbColor& c);

// GamutPolicy::Compress for a single color: binary search on chroma at
// fixed L and h, 1e-4 chroma tolerance, result clamped to [0,1].
SrgbColor compress_chroma(const LabColor& c);

// CIE76 color difference.
double delta_e(const LabColor& x, const LabColor& y);

LchColor lab_to_lch(const LabColor& c);
LabColor lch_to_lab(const LchColor& c);

SrgbColor hsv_to_srgb(const HsvColor& c);

} // namespace puviz
