#include "amvortex/cli/io.hpp"

#include <fstream>

#include "amvortex/error.hpp"

namespace amvortex::cli {

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, comma - start));
    if (item.empty()) throw InputError("empty item in list '" + std::string(text) + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("not a number: '" + item + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

nlohmann::json artifact_header(const std::string& command, const std::string& preset,
                               const nlohmann::json& tolerances) {
  return {{"tool", "amvortex"},
          {"version", AMVORTEX_VERSION},
          {"command", command},
          {"preset", preset},
          {"tolerances", tolerances}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace amvortex::cli
