#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "puviz/ternary.hpp"
#include "puviz/wheel.hpp"

namespace puviz {

// Sidecar header for raw little-endian float32 payloads. The JSON file must
// contain exactly these keys.
struct FieldHeader {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::string dtype = "f32";
    std::string byte_order = "LE";
    std::string layout = "row-major-interleaved";
};

FieldHeader load_field_header(const std::string& path);
void save_field_header(const FieldHeader& header, const std::string& path);

// 2 channels -> vector field, 3 channels -> composition field. Load errors
// carry the byte offset of the offending sample.
std::variant<VectorField2D, CompositionField> load_field(const std::string& header_path,
                                                         const std::string& data_path);

void save_field(const VectorField2D& field, const std::string& header_path,
                const std::string& data_path);
void save_field(const CompositionField& field, const std::string& header_path,
                const std::string& data_path);

// Rectangular grid of finite reals, e.g. one composition channel.
struct Grid2D {
    int width = 0;
    int height = 0;
    std::vector<float> values;  // row-major
};

// CSV of comma-separated finite reals; '#' lines are comments. Parse errors
// carry 1-based line numbers.
Grid2D load_csv_channel(const std::string& path);

// Raw single-channel variant of load_field (header must declare channels=1).
Grid2D load_raw_channel(const std::string& header_path, const std::string& data_path);

// Three equally shaped channels -> one composition field.
CompositionField combine_channels(const Grid2D& c1, const Grid2D& c2, const Grid2D& c3,
                                  const std::array<std::string, 3>& labels);

} // namespace puviz
