#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace puviz {

// Rounds to a fixed number of significant decimal digits. Report JSON is
// emitted through this so identical runs serialize byte-identically.
double round_sig(double v, int digits = 6);

nlohmann::json json_array(const std::vector<double>& values, int digits = 6);

// Pretty-prints with a trailing newline; throws IoError on failure.
void write_json_file(const nlohmann::json& j, const std::string& path);

nlohmann::json read_json_file(const std::string& path);

} // namespace puviz
