#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "puviz/errors.hpp"
#include "puviz/gamut.hpp"
#include "puviz/serial_ref.hpp"
#include "puviz/wheel.hpp"

using namespace puviz;

namespace {

VectorField2D make_vortex(int w, int h) {
    VectorField2D field;
    field.width = w;
    field.height = h;
    field.data.resize(2 * static_cast<std::size_t>(w) * h);
    const double cx = (w - 1) / 2.0;
    const double cy = (h - 1) / 2.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double px = x - cx;
            const double py = cy - y;
            field.data[2 * (static_cast<std::size_t>(y) * w + x)] = static_cast<float>(-py);
            field.data[2 * (static_cast<std::size_t>(y) * w + x) + 1] = static_cast<float>(px);
        }
    }
    return field;
}

bool same_pixels(const Raster& a, const Raster& b) {
    if (a.width != b.width || a.height != b.height) return false;
    for (std::size_t i = 0; i < a.pixels.size(); ++i)
        if (a.pixels[i].r != b.pixels[i].r || a.pixels[i].g != b.pixels[i].g ||
            a.pixels[i].b != b.pixels[i].b)
            return false;
    return true;
}

} // namespace

TEST_CASE("wheel_color cone geometry") {
    // Cone tip: black for every angle.
    for (double theta : {0.0, 1.0, -2.5}) {
        const LabColor tip = wheel_color(theta, 0.0);
        CHECK(tip.L == 0.0);
        CHECK(tip.a == 0.0);
        CHECK(tip.b == 0.0);
    }

    // Full magnitude at hue 0: the cone base point (74, 40, 0) in Lab.
    const WheelSpec spec;
    const LabColor base = wheel_color(radians(-spec.hue_offset_deg), 1.0, spec);
    CHECK(base.L == doctest::Approx(74.0));
    CHECK(base.a == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(std::fabs(base.b) < 1e-9);

    // Linear scaling along the cone surface.
    const LabColor half = wheel_color(0.3, 0.5, spec);
    CHECK(half.L == 37.0);
    CHECK(lab_to_lch(half).C == doctest::Approx(20.0).epsilon(1e-12));

    CHECK_THROWS_AS(wheel_color(0.0, 1.2), InvalidInputError);
    CHECK_THROWS_AS(wheel_color(0.0, -0.1), InvalidInputError);
}

TEST_CASE("wheel lightness is exactly linear in magnitude") {
    const WheelSpec spec;
    for (int i = 0; i <= 20; ++i) {
        const double m = i / 20.0;
        CHECK(wheel_color(1.234, m, spec).L == m * spec.l_max);
    }
}

TEST_CASE("default hue offset equals the CIELAB hue of sRGB red") {
    // 40.0 is a documented constant; recompute rather than trust it.
    const LchColor red = lab_to_lch(srgb_to_lab({1.0, 0.0, 0.0}));
    CHECK(std::fabs(red.h - WheelSpec{}.hue_offset_deg) < 0.01);
}

TEST_CASE("default cone is inside the gamut") {
    const WheelSpec spec;
    for (int mi = 0; mi <= 20; ++mi) {
        for (int h = 0; h < 360; ++h) {
            const double theta = radians(h - spec.hue_offset_deg);
            REQUIRE(in_gamut(wheel_color(theta, mi / 20.0, spec), 1e-3));
        }
    }
}

TEST_CASE("hsv_wheel_color") {
    const SrgbColor red = hsv_wheel_color(0.0, 1.0);
    CHECK(red.r == 1.0);
    CHECK(red.g == 0.0);
    CHECK(red.b == 0.0);

    const SrgbColor black = hsv_wheel_color(1.0, 0.0);
    CHECK(black.r == 0.0);
    CHECK(black.g == 0.0);
    CHECK(black.b == 0.0);

    const SrgbColor green = hsv_wheel_color(radians(120.0), 1.0);
    CHECK(green.r == doctest::Approx(0.0));
    CHECK(green.g == doctest::Approx(1.0));
    CHECK(green.b == doctest::Approx(0.0));
}

TEST_CASE("map_vector_field constant field") {
    VectorField2D field;
    field.width = 4;
    field.height = 3;
    field.data.assign(2 * 12, 0.0f);
    for (int i = 0; i < 12; ++i) field.data[2 * i] = 2.5f;  // vx = c, vy = 0

    const RenderResult r = map_vector_field(field, {}, std::nullopt, GamutPolicy::Compress);
    CHECK(r.scale_used == doctest::Approx(2.5));
    CHECK(r.adjusted_pixels == 0);
    const SrgbColor expected = lab_to_srgb(wheel_color(0.0, 1.0), GamutPolicy::Compress);
    for (const SrgbColor& p : r.image.pixels) {
        REQUIRE(p.r == expected.r);
        REQUIRE(p.g == expected.g);
        REQUIRE(p.b == expected.b);
    }
}

TEST_CASE("map_vector_field matches the per-pixel oracle on a vortex") {
    const VectorField2D field = make_vortex(17, 13);
    const RenderResult r = map_vector_field(field, {}, std::nullopt, GamutPolicy::Compress);

    double vmax = 0.0;
    for (int i = 0; i < 17 * 13; ++i)
        vmax = std::max(vmax, std::hypot(static_cast<double>(field.data[2 * i]),
                                         static_cast<double>(field.data[2 * i + 1])));
    for (int y = 0; y < 13; ++y) {
        for (int x = 0; x < 17; ++x) {
            const double vx = field.vx(x, y);
            const double vy = field.vy(x, y);
            const double m = std::min(std::hypot(vx, vy) / vmax, 1.0);
            const SrgbColor want =
                lab_to_srgb(wheel_color(std::atan2(vy, vx), m), GamutPolicy::Compress);
            const SrgbColor got = r.image.at(x, y);
            REQUIRE(got.r == want.r);
            REQUIRE(got.g == want.g);
            REQUIRE(got.b == want.b);
        }
    }

    // Lightness grows radially from a black center; the exact center pixel
    // is the zero vector.
    const LabColor center = srgb_to_lab(r.image.at(8, 6));
    CHECK(center.L < 1e-9);
    CHECK(srgb_to_lab(r.image.at(16, 6)).L > srgb_to_lab(r.image.at(12, 6)).L);
    CHECK(srgb_to_lab(r.image.at(12, 6)).L > center.L);
}

TEST_CASE("global rotation rotates hue and keeps lightness") {
    const int w = 9, h = 7;
    VectorField2D field = make_vortex(w, h);
    const double phi = radians(25.0);
    VectorField2D rotated = field;
    for (int i = 0; i < w * h; ++i) {
        const double vx = field.data[2 * i];
        const double vy = field.data[2 * i + 1];
        rotated.data[2 * i] = static_cast<float>(vx * std::cos(phi) - vy * std::sin(phi));
        rotated.data[2 * i + 1] = static_cast<float>(vx * std::sin(phi) + vy * std::cos(phi));
    }
    const RenderResult a = map_vector_field(field, {}, 12.0, GamutPolicy::Compress);
    const RenderResult b = map_vector_field(rotated, {}, 12.0, GamutPolicy::Compress);
    for (int i = 0; i < w * h; ++i) {
        const LchColor la = lab_to_lch(srgb_to_lab(a.image.pixels[i]));
        const LchColor lb = lab_to_lch(srgb_to_lab(b.image.pixels[i]));
        REQUIRE(la.L == doctest::Approx(lb.L).epsilon(1e-6));
        if (la.C > 1.0) {
            const double dh = std::fabs(wrap_degrees(lb.h - la.h) - 25.0);
            REQUIRE(dh < 0.1);
        }
    }
}

TEST_CASE("map_vector_field input validation") {
    VectorField2D zeros;
    zeros.width = 2;
    zeros.height = 2;
    zeros.data.assign(8, 0.0f);
    CHECK_THROWS_AS(map_vector_field(zeros, {}, std::nullopt, GamutPolicy::Clip),
                    InvalidInputError);
    CHECK_THROWS_AS(map_vector_field(zeros, {}, -1.0, GamutPolicy::Clip), InvalidInputError);
    // Explicit vmax makes the all-zero field renderable (all black).
    const RenderResult r = map_vector_field(zeros, {}, 1.0, GamutPolicy::Clip);
    CHECK(r.image.pixels[0].r == 0.0);

    VectorField2D bad;
    bad.width = 3;
    bad.height = 2;
    bad.data.assign(10, 0.1f);
    CHECK_THROWS_AS(map_vector_field(bad, {}, 1.0, GamutPolicy::Clip), InvalidInputError);
}

TEST_CASE("magnitudes above vmax saturate to the cone base") {
    VectorField2D field;
    field.width = 2;
    field.height = 1;
    field.data = {3.0f, 0.0f, 30.0f, 0.0f};
    const RenderResult r = map_vector_field(field, {}, 3.0, GamutPolicy::Compress);
    CHECK(same_pixels(r.image, r.image));
    CHECK(r.image.pixels[0].r == r.image.pixels[1].r);
    CHECK(r.image.pixels[0].g == r.image.pixels[1].g);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    const VectorField2D field = make_vortex(64, 48);
    const RenderResult par = map_vector_field(field, {}, std::nullopt, GamutPolicy::Compress);
    const RenderResult ser =
        serial::map_vector_field(field, {}, std::nullopt, GamutPolicy::Compress);
    CHECK(par.scale_used == ser.scale_used);
    CHECK(par.adjusted_pixels == ser.adjusted_pixels);
    CHECK(same_pixels(par.image, ser.image));

    const RenderResult hsv = map_vector_field_hsv(field, std::nullopt);
    CHECK(hsv.scale_used == par.scale_used);
}

TEST_CASE("analyze_wheel on the uniform wheel") {
    const WheelAnalysis a = analyze_wheel(WheelKind::PerceptuallyUniform, 1.0, 3600);
    CHECK(a.angles_deg.size() == 3600);
    CHECK(a.de_per_deg.size() == 3600);
    CHECK(a.lightness.size() == 3600);

    // Constant derivative 2*pi*40/360 = 0.698132 per degree, constant
    // lightness 74, minimum discernible angle 2.3/0.698 = 3.294.
    const auto [lo, hi] = std::minmax_element(a.de_per_deg.begin(), a.de_per_deg.end());
    CHECK(*lo == doctest::Approx(0.698131).epsilon(1e-4));
    CHECK(*hi == doctest::Approx(0.698131).epsilon(1e-4));
    CHECK(a.min_discernible_angle_deg == doctest::Approx(3.2945).epsilon(1e-3));
    for (double l : a.lightness) REQUIRE(l == 74.0);

    // Coefficient of variation of the derivative profile stays below 1%.
    double mean = 0.0;
    for (double d : a.de_per_deg) mean += d;
    mean /= a.de_per_deg.size();
    double var = 0.0;
    for (double d : a.de_per_deg) var += (d - mean) * (d - mean);
    var /= a.de_per_deg.size();
    CHECK(std::sqrt(var) / mean < 0.01);
}

TEST_CASE("wheel delta_e is angle independent") {
    const WheelSpec spec;
    const double delta = radians(1.0);
    const double reference =
        delta_e(wheel_color(0.0, 0.8, spec), wheel_color(delta, 0.8, spec));
    for (int i = 0; i < 36; ++i) {
        const double theta = radians(i * 10.0);
        const double de =
            delta_e(wheel_color(theta, 0.8, spec), wheel_color(theta + delta, 0.8, spec));
        REQUIRE(std::fabs(de - reference) / reference < 0.01);
    }
}

TEST_CASE("analyze_wheel on the HSV wheel") {
    const WheelAnalysis a = analyze_wheel(WheelKind::Hsv, 1.0, 3600);
    const auto [lo, hi] = std::minmax_element(a.de_per_deg.begin(), a.de_per_deg.end());
    // Frozen from the oracle: min 0.1213 near blue, max 3.4430, ratio 28.4.
    CHECK(*hi / *lo > 8.0);
    CHECK(*lo == doctest::Approx(0.12131).epsilon(1e-3));
    CHECK(*hi == doctest::Approx(3.44302).epsilon(1e-3));

    // Lightness is far from constant and dips at the blue primary (240deg).
    const auto lmin = std::min_element(a.lightness.begin(), a.lightness.end());
    const double angle_at_min = a.angles_deg[lmin - a.lightness.begin()];
    CHECK(std::fabs(angle_at_min - 240.0) < 1.0);
    CHECK(*lmin == doctest::Approx(32.297).epsilon(1e-3));
    const auto lmax = std::max_element(a.lightness.begin(), a.lightness.end());
    CHECK(*lmax > 90.0);
}

TEST_CASE("analyze_wheel rejects degenerate and invalid input") {
    CHECK_THROWS_AS(analyze_wheel(WheelKind::PerceptuallyUniform, 0.0, 3600), DegenerateError);
    CHECK_THROWS_AS(analyze_wheel(WheelKind::PerceptuallyUniform, 1.0, 100), InvalidInputError);
    CHECK_THROWS_AS(analyze_wheel(WheelKind::Hsv, 1.0, 3600, -2.3), InvalidInputError);
}

TEST_CASE("wheel analysis serializes to the documented keys") {
    const WheelAnalysis a = analyze_wheel(WheelKind::PerceptuallyUniform, 1.0, 360);
    const nlohmann::json j = to_json(a);
    CHECK(j.contains("angles_deg"));
    CHECK(j.contains("dE_per_deg"));
    CHECK(j.contains("lightness"));
    CHECK(j.contains("min_discernible_angle_deg"));
    CHECK(j.contains("jnd"));
    CHECK(j.at("jnd").get<double>() == 2.3);
    CHECK(j.at("angles_deg").size() == 360);
}
