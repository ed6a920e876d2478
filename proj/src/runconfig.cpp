#include "arithdyn/runconfig.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "arithdyn/error.hpp"

namespace arithdyn {

void RunConfig::apply_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parameter, "cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("config file is not valid JSON: ") + e.what());
  }
  auto get = [&](const char* key, auto& slot) {
    if (j.contains(key)) slot = j[key].get<std::decay_t<decltype(slot)>>();
  };
  get("n_max", n_max);
  if (j.contains("height_bound")) height_bound = j["height_bound"].get<double>();
  if (j.contains("max_coord")) max_coord = j["max_coord"].get<std::int64_t>();
  get("period_bound", period_bound);
  get("tail_window", tail_window);
  get("prime_count", prime_count);
  get("samples_per_prime", samples_per_prime);
  get("seed", seed);
  get("term_count_cap", term_count_cap);
  get("coordinate_digit_cap", coordinate_digit_cap);
  get("prime_min", prime_min);
  get("prime_cap", prime_cap);
  get("enumeration_cap", enumeration_cap);
  get("force_sampling", force_sampling);
  if (j.contains("format")) format = parse_format(j["format"].get<std::string>());
}

RunConfig RunConfig::from_environment() {
  RunConfig cfg;
  if (const char* path = std::getenv("ARITHDYN_CONFIG")) {
    if (*path) cfg.apply_json_file(path);
  }
  return cfg;
}

}  // namespace arithdyn
