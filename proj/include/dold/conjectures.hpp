#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dold/arith.hpp"
#include "dold/cache.hpp"
#include "dold/realizability.hpp"

namespace dold {

// One table row: truncated failure of the second-kind sequence at a horizon,
// its factorization, and the ratio to rad((k-1)!).
struct RepairTableRow {
  uint64_t k = 0;
  Integer failure = 1;
  std::vector<std::pair<uint64_t, unsigned>> factorization;
  Rational ratio;  // failure / rad((k-1)!)
};

// Shares second-kind prefixes and failure results across scans; every scan
// of the same (k, horizon) pair reuses one computation.
class SecondKindScanContext {
 public:
  explicit SecondKindScanContext(PrefixProvider& prefixes)
      : prefixes_(prefixes) {}

  const FailureResult& failure(uint64_t k, uint64_t horizon);
  PrefixProvider& prefixes() { return prefixes_; }

 private:
  PrefixProvider& prefixes_;
  std::map<std::pair<uint64_t, uint64_t>, FailureResult> memo_;
};

std::vector<RepairTableRow> repair_table(SecondKindScanContext& ctx,
                                         uint64_t k_max, uint64_t horizon);

enum class CaseStatus { pass, fail, vacuous, evidence };

struct ConjectureCase {
  std::string label;
  CaseStatus status = CaseStatus::pass;
  std::string detail;
};

// All verdicts are about truncated failures at the stated horizon; a scan
// never claims anything about the infinite-horizon values.
struct ConjectureReport {
  std::string conjecture;  // "1", "2", "3", "4a".."4d"
  std::string range;
  uint64_t horizon = 0;
  std::vector<ConjectureCase> cases;
  std::vector<std::string> counterexamples;  // labels of failed cases

  bool all_pass() const { return counterexamples.empty(); }
};

// p | failure for every prime p < k; also notes the proven sub-case
// p in [sqrt(k), k).
ConjectureReport scan_conjecture1(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon);

// nu_p(failure) == 1 for primes p in [sqrt(k), k); flags the proven range
// p in ((k-1)/2, k).
ConjectureReport scan_conjecture2(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon);

// Evidence only: the ratio failure/rad((k-1)!) per k plus tail minima; a
// limit statement has no finite verdict.
ConjectureReport scan_conjecture3(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon);

// part 'a': failure(p+1) == p * failure(p), primes p <= p_max.
// part 'b': failure(p^j+1) | p^(j-1) * failure(p^j), j in 2..j_max.
// part 'c': nu_p(failure(p^j)) == 1 for j in 2..j_max.
// part 'd': nu_p(failure(p^j+1)) == j for j in 1..j_max.
// Cases with p^j+1 > k_cap are skipped as out of range.
ConjectureReport scan_conjecture4(SecondKindScanContext& ctx, char part,
                                  uint64_t p_max, uint64_t j_max,
                                  uint64_t k_cap, uint64_t horizon);

}  // namespace dold
