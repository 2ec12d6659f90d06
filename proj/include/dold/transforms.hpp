#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dold/arith.hpp"
#include "dold/sequence.hpp"

namespace dold {

// Divisors of n in ascending order, by trial division up to sqrt(n).
std::vector<uint64_t> divisors(uint64_t n);

// (mu*A)(n) = sum over divisors d of n of mu(n/d) A_d, for n = 1..N.
// Result is 0-based: entry i corresponds to n = i+1.
std::vector<Integer> mobius_transform(const IntegerSequencePrefix& A);

// Orbit counts (1/n)(mu*A)(n) as exact rationals in lowest terms.
struct OrbitCountPrefix {
  std::vector<Rational> values;  // 0-based like mobius_transform

  uint64_t size() const { return values.size(); }
  const Rational& at(uint64_t n) const { return values.at(n - 1); }
};

OrbitCountPrefix orbit_counts(const IntegerSequencePrefix& A);

// A_n = sum over divisors d of n of d * O_d, the fix-count sequence of a map
// with O_d cycles of each length d. Entries of O must be non-negative.
IntegerSequencePrefix fix_counts_from_orbits(std::span<const Integer> orbits);

}  // namespace dold
