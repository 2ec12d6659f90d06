#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dold/arith.hpp"

namespace dold {

enum class SequenceFamily { first_unsigned, first_signed, second, external };

// Identifies the generating family and offset parameter k, or "external" for
// ingested data. Used as the cache identity.
struct SequenceId {
  SequenceFamily family = SequenceFamily::external;
  uint64_t k = 0;

  std::string token() const;    // filesystem/cache-safe, e.g. "second_k5"
  std::string display() const;  // e.g. "second kind, k=5"
  bool operator==(const SequenceId&) const = default;
};

// Finite prefix (A_1..A_N), indexed from 1. N >= 1 always.
class IntegerSequencePrefix {
 public:
  IntegerSequencePrefix(std::vector<Integer> values, std::string label,
                        SequenceId id = {});

  uint64_t size() const { return values_.size(); }
  const Integer& at(uint64_t n) const;  // 1-based
  std::span<const Integer> values() const { return values_; }
  const std::string& label() const { return label_; }
  const SequenceId& id() const { return id_; }

  IntegerSequencePrefix truncated(uint64_t n) const;  // first n entries

 private:
  std::vector<Integer> values_;
  std::string label_;
  SequenceId id_;
};

// b-file-style input: "index value" per line, indices consecutive from 1.
// '#' comment lines are skipped; the first one, if any, becomes the label.
// Rejects malformed lines, index gaps, negative values, and empty input.
IntegerSequencePrefix ingest_bfile(std::istream& in,
                                   const std::string& fallback_label);
IntegerSequencePrefix ingest_bfile(const std::filesystem::path& path);

}  // namespace dold
