#include "dold/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dold/errors.hpp"

namespace dold {

void RunConfig::validate() const {
  if (horizon < 1) throw std::invalid_argument("config: horizon must be >= 1");
  if (verify_horizon < horizon) {
    throw std::invalid_argument("config: verify_horizon must be >= horizon");
  }
  if (prime_bound < 2) {
    throw std::invalid_argument("config: prime_bound must be >= 2");
  }
  if (k_max < 1) throw std::invalid_argument("config: k_max must be >= 1");
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestError("config parse error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw IngestError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "horizon") {
        base.horizon = value.get<uint64_t>();
      } else if (key == "verify_horizon") {
        base.verify_horizon = value.get<uint64_t>();
      } else if (key == "prime_bound") {
        base.prime_bound = value.get<uint64_t>();
      } else if (key == "k_max") {
        base.k_max = value.get<uint64_t>();
      } else if (key == "format") {
        base.format = parse_format(value.get<std::string>());
      } else if (key == "cache_dir") {
        base.cache_dir = value.get<std::string>();
      } else {
        throw IngestError("config: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw IngestError("config key '" + key + "': " + e.what());
    }
  }
  return base;
}

void apply_env_overrides(RunConfig& config) {
  if (const char* dir = std::getenv("DOLD_CACHE_DIR")) {
    if (*dir != '\0') config.cache_dir = dir;
  }
}

}  // namespace dold
