#pragma once

// JSON interchange for helicity profiles: {k?, n, components: [{label, h}]}.

#include "helicap/helicity.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace helicap {

class ProfileFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline nlohmann::json to_json(const HelicityProfile& p) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : p.components) comps.push_back({{"label", c.label}, {"h", c.h}});
  nlohmann::json j{{"n", p.n}, {"components", comps}};
  if (p.k != 0) j["k"] = p.k;
  return j;
}

inline std::string emit_profile(const HelicityProfile& p) { return to_json(p).dump(2) + "\n"; }

inline HelicityProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ProfileFormatError("profile: top level must be an object");
  auto positive_int = [&](const char* key) -> std::size_t {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ProfileFormatError(std::string("profile field '") + key + "': expected a non-negative integer");
    return v.get<std::size_t>();
  };
  if (!j.contains("n")) throw ProfileFormatError("profile field 'n': missing");
  const std::size_t n = positive_int("n");
  if (n < 2) throw ProfileFormatError("profile field 'n': helicity requires n >= 2 (got " + std::to_string(n) + ")");
  std::size_t k = 0;
  if (j.contains("k")) k = positive_int("k");
  if (!j.contains("components")) throw ProfileFormatError("profile field 'components': missing");
  const auto& jc = j.at("components");
  if (!jc.is_array()) throw ProfileFormatError("profile field 'components': expected an array");
  std::vector<HelicityComponent> comps;
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string where = "profile field 'components[" + std::to_string(i) + "]";
    const auto& c = jc[i];
    if (!c.is_object()) throw ProfileFormatError(where + "': expected an object");
    if (!c.contains("h") || !c.at("h").is_number()) throw ProfileFormatError(where + ".h': expected a number");
    std::string label = "c" + std::to_string(i);
    if (c.contains("label")) {
      if (!c.at("label").is_string()) throw ProfileFormatError(where + ".label': expected a string");
      label = c.at("label").get<std::string>();
    }
    comps.push_back({label, c.at("h").get<double>()});
  }
  return {k, n, std::move(comps)};
}

/// Parses profile text; syntax errors report line and column.
inline HelicityProfile load_profile_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ProfileFormatError("profile: malformed JSON at line " + std::to_string(line) + ", column " +
                             std::to_string(col));
  }
  return profile_from_json(j);
}

inline HelicityProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProfileFormatError("profile: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_profile_text(ss.str());
}

}  // namespace helicap
