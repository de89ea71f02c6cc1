#ifndef AMVORTEX_CLI_IO_HPP
#define AMVORTEX_CLI_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace amvortex::cli {

/// "1e-3,1e-5" -> {1e-3, 1e-5}. Throws InputError on empty or malformed items.
std::vector<double> parse_double_list(std::string_view text);

/// Reads and parses a JSON file. Throws InputError when unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

/// Writes text to path (truncating). Throws InputError when the file cannot be opened.
void write_text_file(const std::string& path, const std::string& text);

/// Header block embedded in every artifact.
nlohmann::json artifact_header(const std::string& command, const std::string& preset,
                               const nlohmann::json& tolerances);

/// Stable pretty form used for every JSON artifact, newline terminated.
std::string dump(const nlohmann::json& j);

}  // namespace amvortex::cli

#endif  // AMVORTEX_CLI_IO_HPP
