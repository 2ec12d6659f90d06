#pragma once

#include <cstdint>
#include <vector>

#include "dold/arith.hpp"
#include "dold/sequence.hpp"

namespace dold {

enum class StirlingKind { first_unsigned, first_signed, second };

// Signless first kind: permutations of {1..n} with exactly k cycles.
// Triangle recurrence s(n+1,k) = n*s(n,k) + s(n,k-1); s(n,n)=1, s(n,0)=0
// for n >= 1. Domain 1 <= n, 0 <= k <= n.
Integer stirling1_unsigned(uint64_t n, uint64_t k);

// (-1)^(n-k) * stirling1_unsigned(n,k).
Integer stirling1_signed(uint64_t n, uint64_t k);

// Second kind: partitions of an n-set into k non-empty blocks. Domain
// 1 <= k <= n.
Integer stirling2(uint64_t n, uint64_t k);

// (1/k!) * sum_{j=1}^{k} (-1)^(k-j) C(k,j) j^n. Throws
// InternalInconsistencyError if the sum is not divisible by k!.
Integer stirling2_closed(uint64_t n, uint64_t k);

// (k-1)! * stirling2(n,k) as the integral linear combination
// sum_{j=1}^{k} (-1)^(k-j) C(k-1,j-1) j^(n-1); no division involved.
Integer stirling2_scaled(uint64_t n, uint64_t k);

// Residues via the triangle recurrences carried out mod p.
uint64_t stirling1_mod(uint64_t n, uint64_t k, uint64_t p);
uint64_t stirling2_mod(uint64_t n, uint64_t k, uint64_t p);

// One full residue row band: stirling(n, j) mod p for j = 0..k_max.
std::vector<uint64_t> stirling1_row_mod(uint64_t n, uint64_t k_max, uint64_t p);
std::vector<uint64_t> stirling2_row_mod(uint64_t n, uint64_t k_max, uint64_t p);

// Offset sequence (stirling(n+k-1, k))_{n=1..N} for the requested kind.
IntegerSequencePrefix sequence_prefix(StirlingKind kind, uint64_t k,
                                      uint64_t N);

// Multiset (j_1..j_p) of part-size counts: sum j_l = parts and
// sum l*j_l = total.
struct CycleType {
  std::vector<uint64_t> counts;  // counts[l-1] = j_l, l = 1..max_part
  uint64_t max_part = 0;
  uint64_t parts = 0;
  uint64_t total = 0;
};

// All solutions of the two constraint sums, lexicographically by counts.
std::vector<CycleType> enumerate_cycle_types(uint64_t p, uint64_t k,
                                             uint64_t total);

// stirling1(p+k-1, k) as sum over cycle types of
// (p+k-1)! / prod(l^{j_l} j_l!); p prime.
Integer stirling1_partition_sum(uint64_t p, uint64_t k);

// stirling2(p+k-1, k) as sum over cycle types of
// (p+k-1)! / prod((l!)^{j_l} j_l!); p prime.
Integer stirling2_partition_sum(uint64_t p, uint64_t k);

enum class BruteforceKind { first, second };

// Exhaustive count over all permutations (cycle counting) or all set
// partitions (block counting). Enumeration guard n <= 9.
Integer stirling_bruteforce(BruteforceKind kind, uint64_t n, uint64_t k);

constexpr uint64_t kBruteforceLimit = 9;

}  // namespace dold
