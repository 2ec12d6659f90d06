#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dold/arith.hpp"
#include "dold/stirling.hpp"

namespace dold {

// Canonical residues are always reduced to 0..p-1.

// stirling1(p+k-1, k) mod p, cross-checked against (-ceil(k/p)) mod p.
// Throws InternalInconsistencyError if the two disagree.
uint64_t lemma3_residue(uint64_t p, uint64_t k);

// Whether k mod p^2 lies in {(p-2)p+1, ..., (p-1)p}, the exact window in
// which stirling1(p+k-1,k) == 1 mod p.
bool lemma3_one_criterion(uint64_t p, uint64_t k);

// stirling2(p+k-1, k) mod p, cross-checked against both C(p+k-1, p) mod p
// and ceil(k/p) mod p. Throws InternalInconsistencyError on disagreement.
uint64_t lemma4_residue(uint64_t p, uint64_t k);

// Whether k mod p^2 lies in {1, ..., p}.
bool lemma4_one_criterion(uint64_t p, uint64_t k);

// Residue-agreement and criterion-coincidence grid over k = 1..k_max for a
// fixed prime, sharing one mod-p triangle.
struct LemmaSweepResult {
  uint64_t p = 0;
  uint64_t k_max = 0;
  uint64_t cases = 0;
  uint64_t failures = 0;
  std::optional<uint64_t> first_failure_k;
};

LemmaSweepResult lemma3_sweep(uint64_t p, uint64_t k_max);
LemmaSweepResult lemma4_sweep(uint64_t p, uint64_t k_max);

// A prime p with k <= (p-2)p whose index-p orbit count has denominator
// exactly p, certifying the Dold congruence failure of the first-kind
// sequence at that prime.
struct WitnessCertificate {
  uint64_t k = 0;
  uint64_t p = 0;
  uint64_t residue = 0;         // stirling1(p+k-1,k) mod p, != 1
  StirlingKind kind = StirlingKind::first_unsigned;
  long orbit_valuation = 0;     // nu_p of (1/p)(A_p - A_1); must be -1
};

// All certified primes p <= prime_bound with k <= (p-2)p.
std::vector<WitnessCertificate> witness_prime_first_kind(uint64_t k,
                                                         uint64_t prime_bound);

// Smallest prime with sqrt(k) <= p < k (k >= 3); verified to give
// stirling2(p+k-1,k) != 1 mod p.
uint64_t witness_prime_second_kind(uint64_t k);

// Explicit sigma with a p-cycles and b fixed points acting on p-subsets of
// {1..ap+b}; counts fixed subsets exhaustively. Guard: ap+b <= 20.
struct SigmaOrbitResult {
  uint64_t p = 0, a = 0, b = 0;
  uint64_t fixed_subsets = 0;       // must equal a
  uint64_t residue_mod_p = 0;       // fixed_subsets mod p
  uint64_t binomial_mod_p = 0;      // C(ap+b, p) mod p
  bool power_is_identity = false;   // sigma^p == id
  uint64_t subset_count = 0;        // C(ap+b, p), as orbit accounting input
};

SigmaOrbitResult sigma_orbit_oracle(uint64_t p, uint64_t a, uint64_t b);

// Direct check that sum_{d|n} mu(d) (k-1)! stirling2(n/d+k-1, k) vanishes
// mod p^(nu_p(n)); requires p | n.
bool scaled_dold_claim_check(uint64_t k, uint64_t p, uint64_t n);

}  // namespace dold
