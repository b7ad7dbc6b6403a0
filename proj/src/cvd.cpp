#include "puviz/cvd.hpp"

#include <cmath>

#include "puviz/errors.hpp"
#include "puviz/parallel.hpp"

namespace puviz {

CvdMatrix cvd_matrix(const CvdModel& model) {
    if (!(model.severity >= 0.0 && model.severity <= 1.0))
        throw InvalidInputError("cvd severity must lie in [0,1]");
    const double scaled = model.severity * 10.0;
    int k = static_cast<int>(std::floor(scaled));
    double frac = scaled - k;
    if (k >= 10) {
        k = 10;
        frac = 0.0;
    }
    CvdMatrix out = kDeuteranomalyMatrices[k];
    if (frac > 0.0) {
        const CvdMatrix& next = kDeuteranomalyMatrices[k + 1];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                out[r][c] = (1.0 - frac) * out[r][c] + frac * next[r][c];
    }
    return out;
}

Raster simulate_cvd(const Raster& image, const CvdModel& model) {
    const CvdMatrix m = cvd_matrix(model);
    const long n = static_cast<long>(image.pixels.size());
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        const SrgbColor& p = image.pixels[i];
        const double lr = srgb_decode(p.r);
        const double lg = srgb_decode(p.g);
        const double lb = srgb_decode(p.b);
        const SrgbColor sim{
            srgb_encode(m[0][0] * lr + m[0][1] * lg + m[0][2] * lb),
            srgb_encode(m[1][0] * lr + m[1][1] * lg + m[1][2] * lb),
            srgb_encode(m[2][0] * lr + m[2][1] * lg + m[2][2] * lb),
        };
        out.pixels[i] = clamp_to_unit(sim);
    }
    return out;
}

Raster desaturate(const Raster& image) {
    const long n = static_cast<long>(image.pixels.size());
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
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
    const long n = static_cast<long>(image.pixels.size());
    Raster out(image.width, image.height);
    out.alpha = image.alpha;
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
        LabColor lab = srgb_to_lab(image.pixels[i]);
        lab.L = l0;
        out.pixels[i] = lab_to_srgb(lab, GamutPolicy::Compress);
    }
    return out;
}

} // namespace puviz
