#include "puviz/gamut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "puviz/errors.hpp"
#include "puviz/json_util.hpp"
#include "puviz/parallel.hpp"

namespace puviz {

namespace {

// Membership tolerance for the boundary searches. With the 5-decimal white
// point the neutral axis at L=100 converts to channels ~2e-7 outside [0,1],
// so exact membership would make even white "out of gamut"; 1e-6 absorbs
// that without moving any boundary materially.
constexpr double kSearchEps = 1e-6;

constexpr double kChromaBracketHigh = 200.0;  // beyond any sRGB chroma (~134)
constexpr double kChromaTol = 1e-3;

void require_lightness_range(double lightness, const char* who) {
    if (!(lightness >= 0.0 && lightness <= 100.0))
        throw InvalidInputError(std::string(who) + ": lightness must lie in [0,100]");
}

struct Candidate {
    double L = 0.0;
    double hue = 0.0;
    double R = -1.0;
};

// Total order: larger R wins, ties resolve toward lower L then lower hue.
bool better(const Candidate& a, const Candidate& b) {
    if (a.R != b.R) return a.R > b.R;
    if (a.L != b.L) return a.L < b.L;
    return a.hue < b.hue;
}

double triangle_radius(double lightness, double hue_deg) {
    double r = max_chroma(lightness, hue_deg);
    r = std::min(r, max_chroma(lightness, wrap_degrees(hue_deg + 120.0)));
    r = std::min(r, max_chroma(lightness, wrap_degrees(hue_deg + 240.0)));
    return r;
}

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = lo + i * step;
        if (v > hi + 1e-9) break;
        out.push_back(std::min(v, hi));
    }
    return out;
}

// Evaluates the triangle radius on a (lightness x hue) grid and returns the
// best cell. Cells are filled in parallel and reduced serially so the argmax
// is deterministic for any thread count.
Candidate scan(const std::vector<double>& lightnesses, const std::vector<double>& hues,
               Candidate best) {
    const long nl = static_cast<long>(lightnesses.size());
    const long nh = static_cast<long>(hues.size());
    std::vector<double> radii(static_cast<std::size_t>(nl * nh));
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long idx = 0; idx < nl * nh; ++idx) {
        radii[idx] = triangle_radius(lightnesses[idx / nh], wrap_degrees(hues[idx % nh]));
    }
    for (long idx = 0; idx < nl * nh; ++idx) {
        const Candidate cell{lightnesses[idx / nh],
                             std::fmod(wrap_degrees(hues[idx % nh]), 120.0), radii[idx]};
        if (better(cell, best)) best = cell;
    }
    return best;
}

} // namespace

nlohmann::json to_json(const TriangleSolution& s) {
    nlohmann::json j;
    j["L"] = round_sig(s.L);
    j["R"] = round_sig(s.R);
    j["hue_deg"] = round_sig(s.hue_deg);
    return j;
}

bool in_gamut(const LabColor& c, double eps) {
    return srgb_in_unit_range(lab_to_srgb_exact(c), eps);
}

double max_chroma(double lightness, double hue_deg) {
    require_lightness_range(lightness, "max_chroma");
    const double hr = radians(hue_deg);
    const double ch = std::cos(hr);
    const double sh = std::sin(hr);
    const auto fits = [&](double chroma) {
        return in_gamut({lightness, chroma * ch, chroma * sh}, kSearchEps);
    };
    if (!fits(0.0)) return 0.0;
    double lo = 0.0;
    double hi = kChromaBracketHigh;
    if (fits(hi)) return hi;
    while (hi - lo > kChromaTol) {
        const double mid = 0.5 * (lo + hi);
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

double max_inscribed_circle(double lightness, double hue_step_deg) {
    require_lightness_range(lightness, "max_inscribed_circle");
    if (!(hue_step_deg > 0.0 && hue_step_deg <= 0.25))
        throw InvalidInputError("max_inscribed_circle: hue step must lie in (0, 0.25] degrees");
    const long samples = static_cast<long>(std::ceil(360.0 / hue_step_deg));
    double smallest = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : smallest) num_threads(worker_count())
    for (long i = 0; i < samples; ++i) {
        smallest = std::min(smallest, max_chroma(lightness, i * hue_step_deg));
    }
    return smallest;
}

TriangleSolution find_composition_triangle(double l_min, double l_max,
                                           double l_step, double h_step) {
    if (!(l_min <= l_max) || !(l_min >= 0.0) || !(l_max <= 100.0))
        throw InvalidInputError("find_composition_triangle: need 0 <= l_min <= l_max <= 100");
    if (!(l_step > 0.0 && l_step <= 0.25) || !(h_step > 0.0 && h_step <= 0.25))
        throw InvalidInputError("find_composition_triangle: steps must lie in (0, 0.25]");

    // Coarse pass over the whole domain, then two shrinking refinements
    // around the incumbent. The objective is piecewise-smooth, so a 1-degree
    // basin is wide enough for the coarse stage to land in.
    Candidate best = scan(grid(l_min, l_max, 1.0), grid(0.0, 120.0 - 1e-9, 1.0), Candidate{});

    double window = 2.0;
    const double stages[2][2] = {{0.25, 0.25}, {l_step, h_step}};
    for (const auto& stage : stages) {
        const auto ls = grid(std::max(l_min, best.L - window), std::min(l_max, best.L + window), stage[0]);
        const auto hs = grid(best.hue - window, best.hue + window, stage[1]);
        best = scan(ls, hs, best);
        window = 2.0 * std::max(stage[0], stage[1]);
    }
    return {best.L, best.R, best.hue};
}

} // namespace puviz
