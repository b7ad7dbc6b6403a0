#include "puviz/colorspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "puviz/errors.hpp"

namespace puviz {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Linear sRGB -> XYZ for the sRGB primaries under D65 (IEC 61966-2-1).
constexpr Mat3 kRgbToXyz = {{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};

// Cofactor inverse, evaluated at compile time so the forward and inverse
// matrices agree to double precision and round trips stay exact.
constexpr Mat3 invert(const Mat3& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                     - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                     + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Mat3 inv{};
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}

constexpr Mat3 kXyzToRgb = invert(kRgbToXyz);

// CIE Lab companding constants in exact rational form.
constexpr double kLabEpsilon = 216.0 / 24389.0;  // (6/29)^3
constexpr double kLabKappa = 24389.0 / 27.0;

double lab_forward(double t) {
    return t > kLabEpsilon ? std::cbrt(t) : (kLabKappa * t + 16.0) / 116.0;
}

double lab_inverse(double u) {
    const double cube = u * u * u;
    return cube > kLabEpsilon ? cube : (116.0 * u - 16.0) / kLabKappa;
}

bool finite(const SrgbColor& c) {
    return std::isfinite(c.r) && std::isfinite(c.g) && std::isfinite(c.b);
}

bool finite(const LabColor& c) {
    return std::isfinite(c.L) && std::isfinite(c.a) && std::isfinite(c.b);
}

} // namespace

GamutPolicy parse_gamut_policy(const std::string& name) {
    if (name == "error") return GamutPolicy::Error;
    if (name == "clip") return GamutPolicy::Clip;
    if (name == "compress") return GamutPolicy::Compress;
    throw InvalidInputError("unknown gamut policy '" + name + "' (expected error, clip or compress)");
}

const char* to_string(GamutPolicy policy) {
    switch (policy) {
        case GamutPolicy::Error: return "error";
        case GamutPolicy::Clip: return "clip";
        case GamutPolicy::Compress: return "compress";
    }
    return "?";
}

double wrap_degrees(double h) {
    double w = std::fmod(h, 360.0);
    if (w < 0.0) w += 360.0;
    if (w >= 360.0) w = 0.0;  // fmod of a hair below 0 can round up to 360
    return w;
}

double srgb_decode(double encoded) {
    const double sign = encoded < 0.0 ? -1.0 : 1.0;
    const double x = std::fabs(encoded);
    const double lin = x <= 0.04045 ? x / 12.92 : std::pow((x + 0.055) / 1.055, 2.4);
    return sign * lin;
}

double srgb_encode(double linear) {
    const double sign = linear < 0.0 ? -1.0 : 1.0;
    const double x = std::fabs(linear);
    const double enc = x <= 0.0031308 ? 12.92 * x : 1.055 * std::pow(x, 1.0 / 2.4) - 0.055;
    return sign * enc;
}

LabColor srgb_to_lab(const SrgbColor& c) {
    if (!finite(c)) throw InvalidInputError("srgb_to_lab: non-finite channel");
    const double lr = srgb_decode(c.r);
    const double lg = srgb_decode(c.g);
    const double lb = srgb_decode(c.b);
    const double x = kRgbToXyz[0][0] * lr + kRgbToXyz[0][1] * lg + kRgbToXyz[0][2] * lb;
    const double y = kRgbToXyz[1][0] * lr + kRgbToXyz[1][1] * lg + kRgbToXyz[1][2] * lb;
    const double z = kRgbToXyz[2][0] * lr + kRgbToXyz[2][1] * lg + kRgbToXyz[2][2] * lb;
    const double fx = lab_forward(x / kWhiteX);
    const double fy = lab_forward(y / kWhiteY);
    const double fz = lab_forward(z / kWhiteZ);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

SrgbColor lab_to_srgb_exact(const LabColor& c) {
    if (!finite(c)) throw InvalidInputError("lab_to_srgb: non-finite channel");
    const double fy = (c.L + 16.0) / 116.0;
    const double fx = fy + c.a / 500.0;
    const double fz = fy - c.b / 200.0;
    const double x = kWhiteX * lab_inverse(fx);
    const double y = kWhiteY * lab_inverse(fy);
    const double z = kWhiteZ * lab_inverse(fz);
    const double lr = kXyzToRgb[0][0] * x + kXyzToRgb[0][1] * y + kXyzToRgb[0][2] * z;
    const double lg = kXyzToRgb[1][0] * x + kXyzToRgb[1][1] * y + kXyzToRgb[1][2] * z;
    const double lb = kXyzToRgb[2][0] * x + kXyzToRgb[2][1] * y + kXyzToRgb[2][2] * z;
    return {srgb_encode(lr), srgb_encode(lg), srgb_encode(lb)};
}

bool srgb_in_unit_range(const SrgbColor& c, double eps) {
    return c.r >= -eps && c.r <= 1.0 + eps &&
           c.g >= -eps && c.g <= 1.0 + eps &&
           c.b >= -eps && c.b <= 1.0 + eps;
}

SrgbColor clamp_to_unit(const SrgbColor& c) {
    return {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0)};
}

SrgbColor compress_chroma(const LabColor& c) {
    constexpr double kChromaTol = 1e-4;
    const SrgbColor direct = lab_to_srgb_exact(c);
    if (srgb_in_unit_range(direct)) return clamp_to_unit(direct);

    const LchColor lch = lab_to_lch(c);
    const SrgbColor neutral = lab_to_srgb_exact({lch.L, 0.0, 0.0});
    if (!srgb_in_unit_range(neutral)) {
        // L outside [0,100]: no chroma can help, fall back to clipping.
        return clamp_to_unit(direct);
    }
    double lo = 0.0;
    double hi = lch.C;
    while (hi - lo > kChromaTol) {
        const double mid = 0.5 * (lo + hi);
        const SrgbColor probe = lab_to_srgb_exact(lch_to_lab({lch.L, mid, lch.h}));
        (srgb_in_unit_range(probe) ? lo : hi) = mid;
    }
    return clamp_to_unit(lab_to_srgb_exact(lch_to_lab({lch.L, lo, lch.h})));
}

SrgbColor lab_to_srgb(const LabColor& c, GamutPolicy policy) {
    const SrgbColor rgb = lab_to_srgb_exact(c);
    if (srgb_in_unit_range(rgb)) return rgb;
    switch (policy) {
        case GamutPolicy::Clip:
            return clamp_to_unit(rgb);
        case GamutPolicy::Compress:
            return compress_chroma(c);
        case GamutPolicy::Error:
            break;
    }
    throw GamutError("lab_to_srgb", c, rgb);
}

double delta_e(const LabColor& x, const LabColor& y) {
    const double dl = x.L - y.L;
    const double da = x.a - y.a;
    const double db = x.b - y.b;
    return std::sqrt(dl * dl + da * da + db * db);
}

LchColor lab_to_lch(const LabColor& c) {
    const double chroma = std::hypot(c.a, c.b);
    const double hue = chroma == 0.0 ? 0.0 : wrap_degrees(degrees(std::atan2(c.b, c.a)));
    return {c.L, chroma, hue};
}

LabColor lch_to_lab(const LchColor& c) {
    const double hr = radians(c.h);
    return {c.L, c.C * std::cos(hr), c.C * std::sin(hr)};
}

SrgbColor hsv_to_srgb(const HsvColor& c) {
    if (!std::isfinite(c.h) || !std::isfinite(c.s) || !std::isfinite(c.v))
        throw InvalidInputError("hsv_to_srgb: non-finite channel");
    if (c.s < 0.0 || c.s > 1.0 || c.v < 0.0 || c.v > 1.0)
        throw InvalidInputError("hsv_to_srgb: s and v must lie in [0,1]");
    const double h = wrap_degrees(c.h) / 60.0;
    const double chroma = c.v * c.s;
    const double x = chroma * (1.0 - std::fabs(std::fmod(h, 2.0) - 1.0));
    const double m = c.v - chroma;
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(h)) {
        case 0: r = chroma; g = x; break;
        case 1: r = x; g = chroma; break;
        case 2: g = chroma; b = x; break;
        case 3: g = x; b = chroma; break;
        case 4: r = x; b = chroma; break;
        default: r = chroma; b = x; break;
    }
    return {r + m, g + m, b + m};
}

GamutError::GamutError(const std::string& context, const LabColor& lab, const SrgbColor& rgb)
    : Error([&] {
          std::ostringstream os;
          os << context << ": Lab(" << lab.L << ", " << lab.a << ", " << lab.b
             << ") maps to sRGB(" << rgb.r << ", " << rgb.g << ", " << rgb.b
             << ") outside [0,1]";
          return os.str();
      }()),
      lab_(lab),
      rgb_(rgb) {}

} // namespace puviz
