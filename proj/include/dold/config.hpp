#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "dold/reports.hpp"

namespace dold {

struct RunConfig {
  uint64_t horizon = 3000;
  uint64_t verify_horizon = 50000;
  uint64_t prime_bound = 100000;
  uint64_t k_max = 14;
  OutputFormat format = OutputFormat::plain;
  std::string cache_dir;

  void validate() const;  // throws std::invalid_argument
};

// JSON object with any subset of the RunConfig keys; unknown keys rejected.
RunConfig load_config_file(const std::filesystem::path& path,
                           RunConfig base = {});

// DOLD_CACHE_DIR overrides the cache directory when set.
void apply_env_overrides(RunConfig& config);

}  // namespace dold
