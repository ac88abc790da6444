#include "casimir/config_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "casimir/error.hpp"
#include "json_support.hpp"

namespace casimir {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "amplitude_nm", "period_nm", "plate_roughness_nm", "sphere_roughness_nm",
      "radius_nm",    "delta0_nm", "ideal_metal",        "a0_nm",
      "contact_offset_nm", "coefficients"};
  return keys;
}

json to_json_object(const ExperimentConfig& c) {
  json j;
  j["amplitude_nm"] = c.plate.amplitude_A;
  j["period_nm"] = c.plate.period_L;
  j["plate_roughness_nm"] = c.plate.roughness_Ap;
  j["sphere_roughness_nm"] = c.sphere.roughness_As;
  j["radius_nm"] = c.sphere.radius_R;
  j["delta0_nm"] = c.material.delta0;
  j["ideal_metal"] = c.material.ideal;
  j["a0_nm"] = c.a0;
  j["contact_offset_nm"] = c.contact_offset_h;
  j["coefficients"] = c.material.coefficients;
  return j;
}

double number(const json& j, const char* key) {
  if (!j.is_number()) throw Error(std::string("config key '") + key + "' must be a number");
  return j.get<double>();
}

}  // namespace

nlohmann::json detail::config_json(const ExperimentConfig& config) { return to_json_object(config); }

std::string config_to_json(const ExperimentConfig& config, int indent) {
  return to_json_object(config).dump(indent);
}

ExperimentConfig config_from_json(std::string_view text, const ExperimentConfig& base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("config must be a JSON object");

  ExperimentConfig c = base;
  for (const auto& [key, value] : j.items()) {
    if (!known_keys().contains(key)) throw Error("unknown config key '" + key + "'");
    if (key == "amplitude_nm") c.plate.amplitude_A = number(value, "amplitude_nm");
    else if (key == "period_nm") c.plate.period_L = number(value, "period_nm");
    else if (key == "plate_roughness_nm") c.plate.roughness_Ap = number(value, "plate_roughness_nm");
    else if (key == "sphere_roughness_nm") c.sphere.roughness_As = number(value, "sphere_roughness_nm");
    else if (key == "radius_nm") c.sphere.radius_R = number(value, "radius_nm");
    else if (key == "delta0_nm") c.material.delta0 = number(value, "delta0_nm");
    else if (key == "a0_nm") c.a0 = number(value, "a0_nm");
    else if (key == "contact_offset_nm") c.contact_offset_h = number(value, "contact_offset_nm");
    else if (key == "ideal_metal") {
      if (!value.is_boolean()) throw Error("config key 'ideal_metal' must be a boolean");
      c.material.ideal = value.get<bool>();
    } else if (key == "coefficients") {
      if (!value.is_array() || value.size() != 5)
        throw Error("config key 'coefficients' must be an array of 5 numbers");
      for (std::size_t i = 0; i < 5; ++i) c.material.coefficients[i] = number(value[i], "coefficients");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, const ExperimentConfig& base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), base);
}

std::string config_hash(const ExperimentConfig& config) {
  const std::string text = to_json_object(config).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace casimir
