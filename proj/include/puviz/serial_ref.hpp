#pragma once

#include <optional>

#include "puviz/cvd.hpp"
#include "puviz/raster.hpp"
#include "puviz/ternary.hpp"
#include "puviz/wheel.hpp"

// Plain single-threaded reference implementations of the OpenMP kernels.
// They share the per-color functions with the parallel versions but none of
// the loop orchestration, so tests can require bit-identical output and the
// benchmark target can measure the parallel speedup against them.
namespace puviz::serial {

RenderResult map_vector_field(const VectorField2D& field, const WheelSpec& spec,
                              std::optional<double> vmax, GamutPolicy policy);

RenderResult map_composition_field(const CompositionField& field, const TriangleSpec& spec,
                                   std::optional<double> c_total_max, GamutPolicy policy);

Raster simulate_cvd(const Raster& image, const CvdModel& model);

Raster desaturate(const Raster& image);

Raster flatten_lightness(const Raster& image, double l0 = 75.0);

double max_inscribed_circle(double lightness, double hue_step_deg = 0.25);

} // namespace puviz::serial
