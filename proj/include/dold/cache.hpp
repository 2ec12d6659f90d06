#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "dold/sequence.hpp"
#include "dold/stirling.hpp"

namespace dold {

uint64_t fnv1a64(std::string_view data);

// Decimal-text persistence of family prefixes, one file per
// (family, k, horizon). Header carries identity, horizon and a content
// digest; corrupt or mismatched files are treated as misses.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // Returns the prefix truncated to n when any stored horizon >= n exists.
  std::optional<IntegerSequencePrefix> load(StirlingKind kind, uint64_t k,
                                            uint64_t n) const;
  void store(const IntegerSequencePrefix& prefix) const;

 private:
  std::filesystem::path dir_;
};

// In-memory memo over the generators, with optional disk persistence.
// Commands and scans share one provider so repeated (kind, k) lookups are
// computed once.
class PrefixProvider {
 public:
  PrefixProvider() = default;
  explicit PrefixProvider(SequenceCache disk) : disk_(std::move(disk)) {}

  const IntegerSequencePrefix& get(StirlingKind kind, uint64_t k, uint64_t n);

 private:
  std::optional<SequenceCache> disk_;
  std::map<std::tuple<int, uint64_t, uint64_t>, IntegerSequencePrefix> memo_;
};

}  // namespace dold
