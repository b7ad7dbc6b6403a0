#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "puviz/cmap_lint.hpp"
#include "puviz/colorspace.hpp"
#include "puviz/cvd.hpp"
#include "puviz/errors.hpp"
#include "puviz/field_io.hpp"
#include "puviz/gamut.hpp"
#include "puviz/json_util.hpp"
#include "puviz/legend.hpp"
#include "puviz/png_io.hpp"
#include "puviz/ternary.hpp"
#include "puviz/wheel.hpp"

namespace {

using namespace puviz;

std::optional<double> parse_auto(const std::string& text, const char* flag) {
    if (text == "auto") return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v) || v <= 0.0)
        throw InvalidInputError(std::string(flag) + " must be 'auto' or a positive number, got '" +
                                text + "'");
    return v;
}

LegendBackground parse_background(const std::string& name) {
    if (name == "white") return LegendBackground::White;
    if (name == "transparent") return LegendBackground::Transparent;
    throw InvalidInputError("legend background must be 'white' or 'transparent', got '" + name +
                            "'");
}

std::array<std::string, 3> parse_labels(const std::string& text) {
    std::array<std::string, 3> labels{"ch1", "ch2", "ch3"};
    if (text.empty()) return labels;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t comma = text.find(',', start);
        if ((k < 2) != (comma != std::string::npos))
            throw InvalidInputError("--labels needs exactly three comma-separated names");
        labels[k] = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
        if (labels[k].empty())
            throw InvalidInputError("--labels entries must be non-empty");
        start = comma + 1;
    }
    return labels;
}

struct ProfileRequest {
    int row_start = 0;
    int row_count = 0;
    std::string out;
};

// "rows=START:COUNT,out=PATH"
ProfileRequest parse_profile(const std::string& text) {
    ProfileRequest req;
    bool have_rows = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        // 'out=' consumes the rest of the string so paths may contain commas.
        if (text.compare(start, 4, "out=") == 0) {
            req.out = text.substr(start + 4);
            break;
        }
        const std::size_t comma = text.find(',', start);
        const std::string part = text.substr(start, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - start);
        if (part.compare(0, 5, "rows=") == 0) {
            const std::string range = part.substr(5);
            const std::size_t colon = range.find(':');
            if (colon == std::string::npos)
                throw InvalidInputError("--profile rows needs START:COUNT");
            try {
                req.row_start = std::stoi(range.substr(0, colon));
                req.row_count = std::stoi(range.substr(colon + 1));
            } catch (const std::exception&) {
                throw InvalidInputError("--profile rows needs integer START:COUNT");
            }
            have_rows = true;
        } else {
            throw InvalidInputError("--profile expects rows=START:COUNT,out=PATH, got '" + part +
                                    "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (!have_rows || req.out.empty())
        throw InvalidInputError("--profile expects rows=START:COUNT,out=PATH");
    return req;
}

void write_sidecar(const std::string& primary_output, const nlohmann::json& params) {
    write_json_file(params, primary_output + ".params.json");
}

void check_wheel_spec(const WheelSpec& spec) {
    if (!(spec.l_max > 0.0 && spec.l_max <= 100.0) || !(spec.c_max > 0.0))
        throw InvalidInputError("wheel spec needs 0 < lmax <= 100 and cmax > 0");
    for (int h = 0; h < 360; ++h) {
        const double hr = radians(static_cast<double>(h));
        if (!in_gamut({spec.l_max, spec.c_max * std::cos(hr), spec.c_max * std::sin(hr)}, 1e-3))
            throw InvalidInputError(
                "wheel spec is invalid: the full-magnitude ring leaves the sRGB gamut near hue " +
                std::to_string(h) + " deg; lower --lmax or --cmax");
    }
}

int run_map_vector(const std::string& header, const std::string& data, const std::string& out,
                   const std::string& vmax_text, double hue_offset, double lmax, double cmax,
                   const std::string& policy_name, const std::string& reference_hsv,
                   const std::string& legend, int legend_size,
                   const std::string& legend_bg) {
    const auto loaded = load_field(header, data);
    if (!std::holds_alternative<VectorField2D>(loaded))
        throw InvalidInputError("map-vector needs a 2-channel field, got 3 channels");
    const auto& field = std::get<VectorField2D>(loaded);

    const WheelSpec spec{lmax, cmax, hue_offset};
    check_wheel_spec(spec);
    const GamutPolicy policy = parse_gamut_policy(policy_name);
    const std::optional<double> vmax = parse_auto(vmax_text, "--vmax");

    const RenderResult result = map_vector_field(field, spec, vmax, policy);
    save_png(result.image, out);
    std::cout << "wrote " << out << " (" << field.width << "x" << field.height << ")\n";
    if (result.adjusted_pixels > 0)
        std::cout << "note: " << result.adjusted_pixels << " of " << field.width * field.height
                  << " pixels adjusted by the " << policy_name << " policy\n";

    if (!reference_hsv.empty()) {
        const RenderResult hsv = map_vector_field_hsv(field, result.scale_used);
        save_png(hsv.image, reference_hsv);
        std::cout << "wrote " << reference_hsv << " (HSV reference)\n";
    }
    if (!legend.empty()) {
        save_png(render_wheel_legend(spec, legend_size, parse_background(legend_bg)), legend);
        std::cout << "wrote " << legend << " (wheel legend)\n";
    }

    nlohmann::json params;
    params["command"] = "map-vector";
    params["header"] = header;
    params["data"] = data;
    params["out"] = out;
    params["vmax"] = vmax_text;
    params["vmax_resolved"] = round_sig(result.scale_used);
    params["hue_offset"] = round_sig(hue_offset);
    params["lmax"] = round_sig(lmax);
    params["cmax"] = round_sig(cmax);
    params["policy"] = policy_name;
    params["reference_hsv"] = reference_hsv;
    params["legend"] = legend;
    params["legend_size"] = legend_size;
    params["legend_bg"] = legend_bg;
    params["adjusted_pixels"] = result.adjusted_pixels;
    write_sidecar(out, params);
    return 0;
}

Grid2D load_channel_arg(const std::string& arg) {
    const std::size_t colon = arg.find(':');
    if (colon == std::string::npos) return load_csv_channel(arg);
    return load_raw_channel(arg.substr(0, colon), arg.substr(colon + 1));
}

int run_map_composition(const std::vector<std::string>& channel_args,
                        const std::string& labels_text, const std::string& out,
                        const std::string& ctotal_text, const std::string& policy_name,
                        const std::string& reference_rgb, const std::string& legend,
                        int legend_size, const std::string& legend_bg,
                        const std::string& profile_text) {
    const std::array<std::string, 3> labels = parse_labels(labels_text);

    CompositionField field;
    if (channel_args.size() == 1) {
        // One raw header:data pair holding all three channels interleaved.
        const std::size_t colon = channel_args[0].find(':');
        if (colon == std::string::npos)
            throw InvalidInputError(
                "a single --ch must be a raw HEADER:DATA pair with channels=3");
        const auto loaded = load_field(channel_args[0].substr(0, colon),
                                       channel_args[0].substr(colon + 1));
        if (!std::holds_alternative<CompositionField>(loaded))
            throw InvalidInputError("map-composition needs a 3-channel field, got 2 channels");
        field = std::get<CompositionField>(loaded);
        field.labels = labels;
    } else if (channel_args.size() == 3) {
        field = combine_channels(load_channel_arg(channel_args[0]),
                                 load_channel_arg(channel_args[1]),
                                 load_channel_arg(channel_args[2]), labels);
    } else {
        throw InvalidInputError("--ch must appear once (raw 3-channel pair) or three times");
    }

    const TriangleSpec spec;
    const GamutPolicy policy = parse_gamut_policy(policy_name);
    const std::optional<double> ctotal = parse_auto(ctotal_text, "--ctotal-max");

    const RenderResult result = map_composition_field(field, spec, ctotal, policy);
    save_png(result.image, out);
    std::cout << "wrote " << out << " (" << field.width << "x" << field.height << ")\n";
    if (result.adjusted_pixels > 0)
        std::cout << "note: " << result.adjusted_pixels << " of " << field.width * field.height
                  << " pixels adjusted by the " << policy_name << " policy\n";

    if (!reference_rgb.empty()) {
        const RenderResult rgb = map_composition_field_rgb(field);
        save_png(rgb.image, reference_rgb);
        std::cout << "wrote " << reference_rgb << " (R-G-B mixing reference)\n";
    }
    if (!legend.empty()) {
        save_png(render_triangle_legend(spec, field.labels, legend_size,
                                        parse_background(legend_bg)),
                 legend);
        std::cout << "wrote " << legend << " (triangle legend)\n";
    }
    if (!profile_text.empty()) {
        const ProfileRequest req = parse_profile(profile_text);
        const auto profile = row_profile(field, req.row_start, req.row_count);
        std::ofstream csv(req.out);
        if (!csv) throw IoError("cannot open '" + req.out + "' for writing");
        write_profile_csv(csv, field, profile);
        if (!csv) throw IoError("failed writing '" + req.out + "'");
        std::cout << "wrote " << req.out << " (rows " << req.row_start << ".."
                  << req.row_start + req.row_count - 1 << " profile)\n";
    }

    nlohmann::json params;
    params["command"] = "map-composition";
    params["ch"] = channel_args;
    params["labels"] = field.labels;
    params["out"] = out;
    params["ctotal_max"] = ctotal_text;
    params["ctotal_max_resolved"] = round_sig(result.scale_used);
    params["policy"] = policy_name;
    params["reference_rgb"] = reference_rgb;
    params["legend"] = legend;
    params["legend_size"] = legend_size;
    params["legend_bg"] = legend_bg;
    params["profile"] = profile_text;
    params["adjusted_pixels"] = result.adjusted_pixels;
    write_sidecar(out, params);
    return 0;
}

int run_simulate_cvd(const std::string& in, const std::string& out, double severity) {
    const Raster img = load_png(in);
    save_png(simulate_cvd(img, {CvdKind::Deuteranomaly, severity}), out);
    std::cout << "wrote " << out << " (deuteranomaly, severity " << severity << ")\n";
    nlohmann::json params;
    params["command"] = "simulate-cvd";
    params["in"] = in;
    params["out"] = out;
    params["severity"] = round_sig(severity);
    write_sidecar(out, params);
    return 0;
}

int run_analyze_wheel(const std::string& wheel, double m, int steps, double jnd,
                      const std::string& report) {
    WheelKind kind;
    if (wheel == "pu") {
        kind = WheelKind::PerceptuallyUniform;
    } else if (wheel == "hsv") {
        kind = WheelKind::Hsv;
    } else {
        throw InvalidInputError("--wheel must be 'pu' or 'hsv', got '" + wheel + "'");
    }
    const WheelAnalysis analysis = analyze_wheel(kind, m, steps, jnd);
    write_json_file(to_json(analysis), report);
    std::cout << "wrote " << report << " (min discernible angle "
              << round_sig(analysis.min_discernible_angle_deg, 4) << " deg)\n";

    nlohmann::json params;
    params["command"] = "analyze-wheel";
    params["wheel"] = wheel;
    params["m"] = round_sig(m);
    params["steps"] = steps;
    params["jnd"] = round_sig(jnd);
    params["report"] = report;
    write_sidecar(report, params);
    return 0;
}

int run_find_triangle(double lmin, double lmax, double lstep, double hstep,
                      const std::string& report) {
    const TriangleSolution s = find_composition_triangle(lmin, lmax, lstep, hstep);
    write_json_file(to_json(s), report);
    std::cout << "wrote " << report << " (L=" << round_sig(s.L, 4) << " R=" << round_sig(s.R, 4)
              << " hue=" << round_sig(s.hue_deg, 4) << " deg)\n";

    nlohmann::json params;
    params["command"] = "find-triangle";
    params["lmin"] = round_sig(lmin);
    params["lmax"] = round_sig(lmax);
    params["lstep"] = round_sig(lstep);
    params["hstep"] = round_sig(hstep);
    params["report"] = report;
    write_sidecar(report, params);
    return 0;
}

int run_lint_cmap(const std::string& cmap_path, const std::string& compare_path, double jnd,
                  const std::string& report) {
    const Colormap cmap = load_colormap_csv(cmap_path);
    nlohmann::json j = to_json(lint_colormap(cmap, jnd));
    j["name"] = cmap.name;
    nlohmann::json root;
    if (compare_path.empty()) {
        root = std::move(j);
    } else {
        const Colormap other = load_colormap_csv(compare_path);
        nlohmann::json jo = to_json(lint_colormap(other, jnd));
        jo["name"] = other.name;
        root["cmap"] = std::move(j);
        root["compare"] = std::move(jo);
        root["contrast_ratio"] = round_sig(contrast_ratio(cmap, other));
    }
    write_json_file(root, report);
    std::cout << "wrote " << report << "\n";

    nlohmann::json params;
    params["command"] = "lint-cmap";
    params["cmap"] = cmap_path;
    params["compare"] = compare_path;
    params["jnd"] = round_sig(jnd);
    params["report"] = report;
    write_sidecar(report, params);
    return 0;
}

int run_desaturate(const std::string& in, const std::string& out) {
    save_png(desaturate(load_png(in)), out);
    std::cout << "wrote " << out << " (a,b -> 0)\n";
    nlohmann::json params;
    params["command"] = "desaturate";
    params["in"] = in;
    params["out"] = out;
    write_sidecar(out, params);
    return 0;
}

int run_flatten(const std::string& in, const std::string& out, double l0) {
    save_png(flatten_lightness(load_png(in), l0), out);
    std::cout << "wrote " << out << " (L -> " << l0 << ")\n";
    nlohmann::json params;
    params["command"] = "flatten-lightness";
    params["in"] = in;
    params["out"] = out;
    params["l0"] = round_sig(l0);
    write_sidecar(out, params);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perceptually uniform color mapping for vector and composition fields"};
    app.require_subcommand(1);

    auto* mv = app.add_subcommand("map-vector", "render a 2D vector field on the uniform wheel");
    std::string mv_header, mv_data, mv_out, mv_vmax = "auto", mv_policy = "compress";
    std::string mv_ref, mv_legend, mv_legend_bg = "white";
    double mv_hue = 40.0, mv_lmax = 74.0, mv_cmax = 40.0;
    int mv_legend_size = 512;
    mv->add_option("--header", mv_header, "field header JSON")->required();
    mv->add_option("--data", mv_data, "raw float32 payload")->required();
    mv->add_option("--out", mv_out, "output PNG")->required();
    mv->add_option("--vmax", mv_vmax, "magnitude ceiling or 'auto'");
    mv->add_option("--hue-offset", mv_hue, "wheel hue origin in degrees");
    mv->add_option("--lmax", mv_lmax, "cone base lightness");
    mv->add_option("--cmax", mv_cmax, "cone base radius");
    mv->add_option("--policy", mv_policy, "gamut policy: compress|clip|error");
    mv->add_option("--reference-hsv", mv_ref, "also write the HSV reference PNG");
    mv->add_option("--legend", mv_legend, "also write the wheel legend PNG");
    mv->add_option("--legend-size", mv_legend_size, "legend size in pixels");
    mv->add_option("--legend-bg", mv_legend_bg, "legend background: white|transparent");

    auto* mc = app.add_subcommand("map-composition",
                                  "render a 3-component composition field on the pyramid");
    std::vector<std::string> mc_ch;
    std::string mc_labels, mc_out, mc_ctotal = "auto", mc_policy = "compress";
    std::string mc_ref, mc_legend, mc_legend_bg = "white", mc_profile;
    int mc_legend_size = 512;
    mc->add_option("--ch", mc_ch,
                   "channel source: CSV path or raw HEADER:DATA pair; give three, or one "
                   "3-channel raw pair")
        ->required();
    mc->add_option("--labels", mc_labels, "three comma-separated channel names");
    mc->add_option("--out", mc_out, "output PNG")->required();
    mc->add_option("--ctotal-max", mc_ctotal, "total-intensity ceiling or 'auto'");
    mc->add_option("--policy", mc_policy, "gamut policy: compress|clip|error");
    mc->add_option("--reference-rgb", mc_ref, "also write the R-G-B mixing reference PNG");
    mc->add_option("--legend", mc_legend, "also write the triangle legend PNG");
    mc->add_option("--legend-size", mc_legend_size, "legend size in pixels");
    mc->add_option("--legend-bg", mc_legend_bg, "legend background: white|transparent");
    mc->add_option("--profile", mc_profile, "row profile: rows=START:COUNT,out=CSV");

    auto* sc = app.add_subcommand("simulate-cvd", "simulate deuteranomaly on a PNG");
    std::string sc_in, sc_out;
    double sc_severity = 1.0;
    sc->add_option("--in", sc_in, "input PNG")->required();
    sc->add_option("--out", sc_out, "output PNG")->required();
    sc->add_option("--severity", sc_severity, "deficiency severity in [0,1]");

    auto* aw = app.add_subcommand("analyze-wheel", "perceptual derivative of a color wheel");
    std::string aw_wheel, aw_report;
    double aw_m = 1.0, aw_jnd = 2.3;
    int aw_steps = 3600;
    aw->add_option("--wheel", aw_wheel, "wheel kind: pu|hsv")->required();
    aw->add_option("--m", aw_m, "magnitude in (0,1]");
    aw->add_option("--steps", aw_steps, "angle samples (>= 360)");
    aw->add_option("--jnd", aw_jnd, "just-noticeable difference");
    aw->add_option("--report", aw_report, "output report JSON")->required();

    auto* ft = app.add_subcommand("find-triangle",
                                  "largest white-centered triangle inside the gamut");
    std::string ft_report;
    double ft_lmin = 30.0, ft_lmax = 90.0, ft_lstep = 0.05, ft_hstep = 0.05;
    ft->add_option("--lmin", ft_lmin, "lightness range start");
    ft->add_option("--lmax", ft_lmax, "lightness range end");
    ft->add_option("--lstep", ft_lstep, "final lightness resolution");
    ft->add_option("--hstep", ft_hstep, "final hue resolution in degrees");
    ft->add_option("--report", ft_report, "output report JSON")->required();

    auto* lc = app.add_subcommand("lint-cmap", "quantitative scalar-colormap analysis");
    std::string lc_cmap, lc_compare, lc_report;
    double lc_jnd = 2.3;
    lc->add_option("--cmap", lc_cmap, "colormap CSV (rows of r,g,b in [0,1])")->required();
    lc->add_option("--compare", lc_compare, "second colormap CSV for a contrast ratio");
    lc->add_option("--jnd", lc_jnd, "just-noticeable difference");
    lc->add_option("--report", lc_report, "output report JSON")->required();

    auto* ds = app.add_subcommand("desaturate", "a,b -> 0 grayscale transform");
    std::string ds_in, ds_out;
    ds->add_option("--in", ds_in, "input PNG")->required();
    ds->add_option("--out", ds_out, "output PNG")->required();

    auto* fl = app.add_subcommand("flatten-lightness", "L -> L0 transform");
    std::string fl_in, fl_out;
    double fl_l0 = 75.0;
    fl->add_option("--in", fl_in, "input PNG")->required();
    fl->add_option("--out", fl_out, "output PNG")->required();
    fl->add_option("--l0", fl_l0, "target lightness");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(mv))
            return run_map_vector(mv_header, mv_data, mv_out, mv_vmax, mv_hue, mv_lmax, mv_cmax,
                                  mv_policy, mv_ref, mv_legend, mv_legend_size, mv_legend_bg);
        if (app.got_subcommand(mc))
            return run_map_composition(mc_ch, mc_labels, mc_out, mc_ctotal, mc_policy, mc_ref,
                                       mc_legend, mc_legend_size, mc_legend_bg, mc_profile);
        if (app.got_subcommand(sc)) return run_simulate_cvd(sc_in, sc_out, sc_severity);
        if (app.got_subcommand(aw))
            return run_analyze_wheel(aw_wheel, aw_m, aw_steps, aw_jnd, aw_report);
        if (app.got_subcommand(ft))
            return run_find_triangle(ft_lmin, ft_lmax, ft_lstep, ft_hstep, ft_report);
        if (app.got_subcommand(lc)) return run_lint_cmap(lc_cmap, lc_compare, lc_jnd, lc_report);
        if (app.got_subcommand(ds)) return run_desaturate(ds_in, ds_out);
        if (app.got_subcommand(fl)) return run_flatten(fl_in, fl_out, fl_l0);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const puviz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
