#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dold/arith.hpp"
#include "dold/sequence.hpp"

namespace dold {

// Per-index Dold and sign verdicts for a prefix. divisible[i] holds iff
// denominators[i] == 1; first violations are the minimal failing indices.
struct DoldReport {
  uint64_t horizon = 0;
  std::vector<bool> divisible;       // 0-based, entry i is n = i+1
  std::vector<bool> sign_ok;
  std::vector<Integer> denominators;  // denom((1/n)(mu*A)(n))
  std::optional<uint64_t> first_dold_violation;
  std::optional<uint64_t> first_sign_violation;

  bool realizable_up_to_horizon() const {
    return !first_dold_violation && !first_sign_violation;
  }
};

DoldReport dold_check(const IntegerSequencePrefix& A);

// Non-decreasing plus the doubling growth A_{2n} >= n*A_n for all 2n <= N.
// When it holds, the sign condition over the prefix is re-verified rather
// than assumed (an inconsistency there would be a library bug).
struct GrowthResult {
  bool ok = false;
  std::optional<uint64_t> first_counterexample;  // n of the failed comparison
};

GrowthResult growth_sufficiency(const IntegerSequencePrefix& A);  // N >= 2

// Smallest index witnessing each maximal prime power of the failure lcm.
struct PrimePowerWitness {
  uint64_t prime = 0;
  unsigned exponent = 0;
  uint64_t index = 0;
};

struct FailureResult {
  uint64_t horizon = 0;
  Integer value = 1;  // lcm of the per-index denominators, n <= horizon
  std::vector<PrimePowerWitness> witnesses;  // ascending by prime
  bool sign_ok = true;
};

FailureResult failure_truncated(const IntegerSequencePrefix& A);

// Entrywise m*A_n, m >= 1.
IntegerSequencePrefix repair(const IntegerSequencePrefix& A, const Integer& m);

// Orbit counts of a finite-horizon realizing permutation (O_n cycles of
// length n), when every (1/n)(mu*A)(n) is a non-negative integer. Throws
// NotRealizableError at the first violating index otherwise.
std::vector<Integer> realize(const IntegerSequencePrefix& A);

// Dold divisibility of multiplier * (stirling2(n+k-1,k)) for n = 1..horizon,
// evaluated per index with modular arithmetic so large horizons stay cheap.
// multiplier must divide (k-1)!. Returns the first violating n, if any.
std::optional<uint64_t> verify_scaled_second_kind_dold(uint64_t k,
                                                       const Integer& multiplier,
                                                       uint64_t horizon);

}  // namespace dold
