#include "puviz/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "puviz/errors.hpp"
#include "puviz/json_util.hpp"

namespace puviz {

namespace {

float float_from_le(const unsigned char* bytes) {
    const std::uint32_t word = static_cast<std::uint32_t>(bytes[0]) |
                               static_cast<std::uint32_t>(bytes[1]) << 8 |
                               static_cast<std::uint32_t>(bytes[2]) << 16 |
                               static_cast<std::uint32_t>(bytes[3]) << 24;
    return std::bit_cast<float>(word);
}

void float_to_le(float value, unsigned char* bytes) {
    const std::uint32_t word = std::bit_cast<std::uint32_t>(value);
    bytes[0] = static_cast<unsigned char>(word);
    bytes[1] = static_cast<unsigned char>(word >> 8);
    bytes[2] = static_cast<unsigned char>(word >> 16);
    bytes[3] = static_cast<unsigned char>(word >> 24);
}

// Payload loader shared by the field and channel entry points. Validates
// size against the header and finiteness of every sample.
std::vector<float> load_payload(const FieldHeader& header, const std::string& data_path,
                                bool require_non_negative) {
    std::ifstream in(data_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + data_path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed reading '" + data_path + "'");

    const std::size_t expected = static_cast<std::size_t>(header.width) * header.height *
                                 header.channels * 4;
    if (bytes.size() != expected)
        throw LoadError("'" + data_path + "': payload is " + std::to_string(bytes.size()) +
                        " bytes, header declares " + std::to_string(expected));

    std::vector<float> values(expected / 4);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const float v = float_from_le(bytes.data() + 4 * i);
        if (!std::isfinite(v))
            throw LoadError("'" + data_path + "': non-finite value at byte offset " +
                            std::to_string(4 * i));
        if (require_non_negative && v < 0.0f)
            throw LoadError("'" + data_path + "': negative composition value at byte offset " +
                            std::to_string(4 * i));
        values[i] = v;
    }
    return values;
}

void save_payload(const std::vector<float>& values, const std::string& data_path) {
    std::ofstream out(data_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + data_path + "' for writing");
    std::vector<unsigned char> bytes(values.size() * 4);
    for (std::size_t i = 0; i < values.size(); ++i) float_to_le(values[i], bytes.data() + 4 * i);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing '" + data_path + "'");
}

int positive_int(const nlohmann::json& j, const char* key, const std::string& path) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long>() < 1)
        throw LoadError("'" + path + "': key '" + std::string(key) +
                        "' must be a positive integer");
    return v.get<int>();
}

} // namespace

FieldHeader load_field_header(const std::string& path) {
    const nlohmann::json j = read_json_file(path);
    if (!j.is_object()) throw LoadError("'" + path + "': header must be a JSON object");

    const std::set<std::string> expected{"width", "height", "channels",
                                         "dtype", "byte_order", "layout"};
    std::set<std::string> seen;
    for (const auto& item : j.items()) seen.insert(item.key());
    if (seen != expected) {
        std::ostringstream os;
        os << "'" << path << "': header must contain exactly the keys";
        for (const auto& k : expected) os << " '" << k << "'";
        throw LoadError(os.str());
    }

    FieldHeader h;
    h.width = positive_int(j, "width", path);
    h.height = positive_int(j, "height", path);
    h.channels = positive_int(j, "channels", path);
    h.dtype = j.at("dtype").get<std::string>();
    h.byte_order = j.at("byte_order").get<std::string>();
    h.layout = j.at("layout").get<std::string>();
    if (h.dtype != "f32") throw LoadError("'" + path + "': unsupported dtype '" + h.dtype + "'");
    if (h.byte_order != "LE")
        throw LoadError("'" + path + "': unsupported byte order '" + h.byte_order + "'");
    if (h.layout != "row-major-interleaved")
        throw LoadError("'" + path + "': unsupported layout '" + h.layout + "'");
    return h;
}

void save_field_header(const FieldHeader& header, const std::string& path) {
    nlohmann::json j;
    j["width"] = header.width;
    j["height"] = header.height;
    j["channels"] = header.channels;
    j["dtype"] = header.dtype;
    j["byte_order"] = header.byte_order;
    j["layout"] = header.layout;
    write_json_file(j, path);
}

std::variant<VectorField2D, CompositionField> load_field(const std::string& header_path,
                                                         const std::string& data_path) {
    const FieldHeader h = load_field_header(header_path);
    if (h.channels != 2 && h.channels != 3)
        throw LoadError("'" + header_path + "': load_field expects 2 or 3 channels, got " +
                        std::to_string(h.channels));

    if (h.channels == 2) {
        VectorField2D field;
        field.width = h.width;
        field.height = h.height;
        field.data = load_payload(h, data_path, false);
        return field;
    }
    const std::vector<float> interleaved = load_payload(h, data_path, true);
    CompositionField field;
    field.width = h.width;
    field.height = h.height;
    const std::size_t n = interleaved.size() / 3;
    for (auto& plane : field.channels) plane.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        field.channels[0][i] = interleaved[3 * i];
        field.channels[1][i] = interleaved[3 * i + 1];
        field.channels[2][i] = interleaved[3 * i + 2];
    }
    return field;
}

void save_field(const VectorField2D& field, const std::string& header_path,
                const std::string& data_path) {
    save_field_header({field.width, field.height, 2}, header_path);
    save_payload(field.data, data_path);
}

void save_field(const CompositionField& field, const std::string& header_path,
                const std::string& data_path) {
    save_field_header({field.width, field.height, 3}, header_path);
    std::vector<float> interleaved(field.channels[0].size() * 3);
    for (std::size_t i = 0; i < field.channels[0].size(); ++i) {
        interleaved[3 * i] = field.channels[0][i];
        interleaved[3 * i + 1] = field.channels[1][i];
        interleaved[3 * i + 2] = field.channels[2][i];
    }
    save_payload(interleaved, data_path);
}

Grid2D load_csv_channel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    Grid2D grid;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<float> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string cell = line.substr(start, comma == std::string::npos
                                                            ? std::string::npos
                                                            : comma - start);
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            while (end && (*end == ' ' || *end == '\t')) ++end;
            if (end == cell.c_str() || *end != '\0')
                throw LoadError("'" + path + "' line " + std::to_string(line_no) +
                                ": cannot parse '" + cell + "' as a number");
            if (!std::isfinite(v))
                throw LoadError("'" + path + "' line " + std::to_string(line_no) +
                                ": non-finite value");
            row.push_back(static_cast<float>(v));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (grid.height == 0) {
            grid.width = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != grid.width) {
            throw LoadError("'" + path + "' line " + std::to_string(line_no) + ": expected " +
                            std::to_string(grid.width) + " fields, got " +
                            std::to_string(row.size()));
        }
        grid.values.insert(grid.values.end(), row.begin(), row.end());
        ++grid.height;
    }
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    if (grid.height == 0) throw LoadError("'" + path + "': no data rows");
    return grid;
}

Grid2D load_raw_channel(const std::string& header_path, const std::string& data_path) {
    const FieldHeader h = load_field_header(header_path);
    if (h.channels != 1)
        throw LoadError("'" + header_path + "': a raw channel needs channels=1, got " +
                        std::to_string(h.channels));
    Grid2D grid;
    grid.width = h.width;
    grid.height = h.height;
    grid.values = load_payload(h, data_path, false);
    return grid;
}

CompositionField combine_channels(const Grid2D& c1, const Grid2D& c2, const Grid2D& c3,
                                  const std::array<std::string, 3>& labels) {
    const Grid2D* grids[3] = {&c1, &c2, &c3};
    for (const Grid2D* g : grids) {
        if (g->width != c1.width || g->height != c1.height)
            throw InvalidInputError("composition channels must share one shape; got " +
                                    std::to_string(g->width) + "x" + std::to_string(g->height) +
                                    " vs " + std::to_string(c1.width) + "x" +
                                    std::to_string(c1.height));
    }
    CompositionField field;
    field.width = c1.width;
    field.height = c1.height;
    field.labels = labels;
    for (int ch = 0; ch < 3; ++ch) {
        for (std::size_t i = 0; i < grids[ch]->values.size(); ++i)
            if (grids[ch]->values[i] < 0.0f)
                throw InvalidInputError("channel '" + labels[ch] +
                                        "' has a negative value at index " + std::to_string(i));
        field.channels[ch] = grids[ch]->values;
    }
    return field;
}

} // namespace puviz
