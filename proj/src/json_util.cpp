#include "puviz/json_util.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "puviz/errors.hpp"

namespace puviz {

double round_sig(double v, int digits) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

nlohmann::json json_array(const std::vector<double>& values, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) arr.push_back(round_sig(v, digits));
    return arr;
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing '" + path + "'");
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError("'" + path + "': " + e.what());
    }
    return j;
}

} // namespace puviz
