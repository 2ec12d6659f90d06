#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dold {

// Malformed or unacceptable external input (b-files, config files).
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

// A computed identity that must hold by construction failed; indicates a bug
// in this library, never in the input. CLI maps this to exit code 2.
class InternalInconsistencyError : public std::logic_error {
 public:
  explicit InternalInconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

enum class RealizeFailureReason { non_integral, negative };

// realize() found an orbit count that is not a non-negative integer.
class NotRealizableError : public std::runtime_error {
 public:
  NotRealizableError(uint64_t index, RealizeFailureReason reason)
      : std::runtime_error("not realizable up to horizon: orbit count at n=" +
                           std::to_string(index) +
                           (reason == RealizeFailureReason::non_integral
                                ? " is not an integer"
                                : " is negative")),
        index(index),
        reason(reason) {}

  uint64_t index;
  RealizeFailureReason reason;
};

}  // namespace dold
