#pragma once

#include <array>

#include "puviz/raster.hpp"

namespace puviz {

enum class CvdKind { Deuteranomaly };

struct CvdModel {
    CvdKind kind = CvdKind::Deuteranomaly;
    double severity = 1.0;  // in [0,1]; 1.0 is full deuteranopia
};

using CvdMatrix = std::array<std::array<double, 3>, 3>;

// Physiologically-based deuteranomaly matrices (Machado, Oliveira &
// Fernandes 2009), tabulated at severity 0.0 .. 1.0 in 0.1 steps. They act
// on linear RGB; rows sum to 1 so neutrals are fixed points.
extern const std::array<CvdMatrix, 11> kDeuteranomalyMatrices;

// Table lookup with linear interpolation between the 0.1 severity steps.
CvdMatrix cvd_matrix(const CvdModel& model);

// Per pixel: decode to linear RGB, apply the model matrix, re-encode,
// clamp to [0,1]. Alpha passes through untouched.
Raster simulate_cvd(const Raster& image, const CvdModel& model);

// a,b -> 0: the grayscale version of an image at unchanged lightness.
Raster desaturate(const Raster& image);

// L -> l0 at unchanged a,b (chroma compressed back into gamut), leaving
// only hue/saturation information.
Raster flatten_lightness(const Raster& image, double l0 = 75.0);

} // namespace puviz
