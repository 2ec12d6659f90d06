#include "dold/stirling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dold/errors.hpp"

namespace dold {

namespace {

void check_domain_first(uint64_t n, uint64_t k) {
  if (n < 1 || k > n) {
    throw std::invalid_argument("stirling1: need 1 <= n and 0 <= k <= n");
  }
}

void check_domain_second(uint64_t n, uint64_t k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("stirling2: need 1 <= k <= n");
  }
}

// Rolls the triangle up to row n, keeping columns 0..k only. row[j] holds
// stirling(row_index, j).
template <typename Step>
Integer triangle_column(uint64_t n, uint64_t k, Step step) {
  std::vector<Integer> row(k + 1, Integer(0));
  row[0] = 1;  // row 0: stirling(0,0) = 1
  for (uint64_t m = 1; m <= n; ++m) {
    uint64_t hi = std::min(m, k);
    for (uint64_t j = hi; j >= 1; --j) {
      row[j] = step(m, j, row[j], row[j - 1]);
    }
    row[0] = 0;  // stirling(m, 0) = 0 for m >= 1
  }
  return row[k];
}

void check_modulus(uint64_t p) {
  // operands stay < p, so p below 2^31 keeps products inside 64 bits
  if (p < 2 || p >= (1ull << 31)) {
    throw std::invalid_argument("stirling mod: modulus must be in 2..2^31");
  }
}

uint64_t mulmod_small(uint64_t a, uint64_t b, uint64_t p) {
  return (a * b) % p;
}

// Same rolling scheme mod p. p stays word-sized and small.
std::vector<uint64_t> triangle_row_mod(uint64_t n, uint64_t k, uint64_t p,
                                       bool second_kind) {
  std::vector<uint64_t> row(k + 1, 0);
  row[0] = 1 % p;
  for (uint64_t m = 1; m <= n; ++m) {
    uint64_t hi = std::min(m, k);
    uint64_t mult = second_kind ? 0 : (m - 1) % p;
    for (uint64_t j = hi; j >= 1; --j) {
      uint64_t factor = second_kind ? j % p : mult;
      row[j] = (mulmod_small(factor, row[j], p) + row[j - 1]) % p;
    }
    row[0] = 0;
  }
  return row;
}

}  // namespace

Integer stirling1_unsigned(uint64_t n, uint64_t k) {
  check_domain_first(n, k);
  if (k == 0) return 0;
  return triangle_column(n, k, [](uint64_t m, uint64_t, const Integer& same,
                                  const Integer& left) {
    return Integer((m - 1) * same + left);
  });
}

Integer stirling1_signed(uint64_t n, uint64_t k) {
  Integer v = stirling1_unsigned(n, k);
  return ((n - k) % 2 == 0) ? v : Integer(-v);
}

Integer stirling2(uint64_t n, uint64_t k) {
  check_domain_second(n, k);
  return triangle_column(n, k, [](uint64_t, uint64_t j, const Integer& same,
                                  const Integer& left) {
    return Integer(j * same + left);
  });
}

Integer stirling2_closed(uint64_t n, uint64_t k) {
  check_domain_second(n, k);
  Integer sum = 0;
  for (uint64_t j = 1; j <= k; ++j) {
    Integer term = binomial(k, j) * power(Integer(static_cast<unsigned long>(j)), n);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Integer kfact = factorial(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), kfact.get_mpz_t())) {
    throw InternalInconsistencyError(
        "stirling2_closed: alternating sum not divisible by k! at n=" +
        std::to_string(n) + " k=" + std::to_string(k));
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), kfact.get_mpz_t());
  return out;
}

Integer stirling2_scaled(uint64_t n, uint64_t k) {
  check_domain_second(n, k);
  Integer sum = 0;
  for (uint64_t j = 1; j <= k; ++j) {
    Integer term =
        binomial(k - 1, j - 1) * power(Integer(static_cast<unsigned long>(j)), n - 1);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

uint64_t stirling1_mod(uint64_t n, uint64_t k, uint64_t p) {
  check_domain_first(n, k);
  check_modulus(p);
  return triangle_row_mod(n, k, p, /*second_kind=*/false)[k];
}

uint64_t stirling2_mod(uint64_t n, uint64_t k, uint64_t p) {
  check_domain_second(n, k);
  check_modulus(p);
  return triangle_row_mod(n, k, p, /*second_kind=*/true)[k];
}

std::vector<uint64_t> stirling1_row_mod(uint64_t n, uint64_t k_max,
                                        uint64_t p) {
  check_domain_first(n, std::min(n, k_max));
  check_modulus(p);
  return triangle_row_mod(n, k_max, p, /*second_kind=*/false);
}

std::vector<uint64_t> stirling2_row_mod(uint64_t n, uint64_t k_max,
                                        uint64_t p) {
  if (n < 1) throw std::invalid_argument("stirling2_row_mod: n >= 1");
  check_modulus(p);
  return triangle_row_mod(n, k_max, p, /*second_kind=*/true);
}

namespace {

std::vector<Integer> second_kind_values(uint64_t k, uint64_t N) {
  // Scaled closed form with running powers: entry n is
  // sum_j +-C(k-1,j-1) j^(n+k-2), divided exactly by (k-1)!.
  std::vector<Integer> coeff(k + 1);
  std::vector<Integer> pw(k + 1);
  for (uint64_t j = 1; j <= k; ++j) {
    coeff[j] = binomial(k - 1, j - 1);
    pw[j] = power(Integer(static_cast<unsigned long>(j)), k - 1);  // j^(n+k-2) at n=1
  }
  Integer km1fact = factorial(k - 1);
  std::vector<Integer> values;
  values.reserve(N);
  for (uint64_t n = 1; n <= N; ++n) {
    Integer sum = 0;
    for (uint64_t j = 1; j <= k; ++j) {
      if ((k - j) % 2 == 0) {
        mpz_addmul(sum.get_mpz_t(), coeff[j].get_mpz_t(), pw[j].get_mpz_t());
      } else {
        mpz_submul(sum.get_mpz_t(), coeff[j].get_mpz_t(), pw[j].get_mpz_t());
      }
      mpz_mul_ui(pw[j].get_mpz_t(), pw[j].get_mpz_t(), j);
    }
    if (!mpz_divisible_p(sum.get_mpz_t(), km1fact.get_mpz_t())) {
      throw InternalInconsistencyError(
          "sequence_prefix: scaled value not divisible by (k-1)! at n=" +
          std::to_string(n));
    }
    Integer v;
    mpz_divexact(v.get_mpz_t(), sum.get_mpz_t(), km1fact.get_mpz_t());
    values.push_back(std::move(v));
  }
  return values;
}

std::vector<Integer> first_kind_values(uint64_t k, uint64_t N, bool signed_kind) {
  // Rolls rows k..N+k-1 of the triangle, truncated to columns <= k.
  std::vector<Integer> row(k + 1, Integer(0));
  row[0] = 1;
  std::vector<Integer> values;
  values.reserve(N);
  for (uint64_t m = 1; m <= N + k - 1; ++m) {
    uint64_t hi = std::min(m, k);
    for (uint64_t j = hi; j >= 1; --j) {
      row[j] = (m - 1) * row[j] + row[j - 1];
    }
    row[0] = 0;
    if (m >= k) {
      // entry n = m - k + 1; sign (-1)^(n-1) for the signed kind
      if (signed_kind && (m - k) % 2 == 1) {
        values.push_back(-row[k]);
      } else {
        values.push_back(row[k]);
      }
    }
  }
  return values;
}

}  // namespace

IntegerSequencePrefix sequence_prefix(StirlingKind kind, uint64_t k,
                                      uint64_t N) {
  if (k < 1 || N < 1) {
    throw std::invalid_argument("sequence_prefix: need k >= 1 and N >= 1");
  }
  std::string offset = "n+" + std::to_string(k - 1);
  if (k == 1) offset = "n";
  switch (kind) {
    case StirlingKind::second:
      return IntegerSequencePrefix(
          second_kind_values(k, N),
          "stirling2(" + offset + ", " + std::to_string(k) + ")",
          {SequenceFamily::second, k});
    case StirlingKind::first_unsigned:
      return IntegerSequencePrefix(
          first_kind_values(k, N, false),
          "stirling1(" + offset + ", " + std::to_string(k) + ")",
          {SequenceFamily::first_unsigned, k});
    case StirlingKind::first_signed:
      return IntegerSequencePrefix(
          first_kind_values(k, N, true),
          "stirling1_signed(" + offset + ", " + std::to_string(k) + ")",
          {SequenceFamily::first_signed, k});
  }
  throw std::invalid_argument("sequence_prefix: unknown kind");
}

std::vector<CycleType> enumerate_cycle_types(uint64_t p, uint64_t k,
                                             uint64_t total) {
  if (p < 1) throw std::invalid_argument("enumerate_cycle_types: p >= 1");
  std::vector<CycleType> out;
  std::vector<uint64_t> counts(p, 0);
  // Chooses j_1..j_p left to right; prunes on both linear constraints.
  auto rec = [&](auto&& self, uint64_t part, uint64_t parts_left,
                 uint64_t total_left) -> void {
    if (part == p) {
      // j_p is forced: j_p = parts_left and p*j_p = total_left
      if (total_left == parts_left * p) {
        counts[p - 1] = parts_left;
        out.push_back({counts, p, k, total});
      }
      return;
    }
    uint64_t max_j = std::min(parts_left, total_left / part);
    for (uint64_t j = 0; j <= max_j; ++j) {
      // remaining parts must fit in sizes part+1..p
      uint64_t pl = parts_left - j;
      uint64_t tl = total_left - j * part;
      if (tl < pl * (part + 1) || tl > pl * p) continue;
      counts[part - 1] = j;
      self(self, part + 1, pl, tl);
    }
    counts[part - 1] = 0;
  };
  if (p == 1) {
    if (k * 1 == total) {
      counts[0] = k;
      out.push_back({counts, p, k, total});
    }
    return out;
  }
  rec(rec, 1, k, total);
  return out;
}

namespace {

Integer partition_sum(uint64_t p, uint64_t k, bool second_kind) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("partition_sum: p must be prime");
  }
  if (k < 1) throw std::invalid_argument("partition_sum: k >= 1");
  uint64_t total = p + k - 1;
  Integer numerator = factorial(total);
  Integer sum = 0;
  for (const CycleType& ct : enumerate_cycle_types(p, k, total)) {
    Integer den = 1;
    for (uint64_t part = 1; part <= p; ++part) {
      uint64_t j = ct.counts[part - 1];
      if (j == 0) continue;
      Integer base = second_kind ? factorial(part)
                                 : Integer(static_cast<unsigned long>(part));
      den *= power(base, j) * factorial(j);
    }
    if (!mpz_divisible_p(numerator.get_mpz_t(), den.get_mpz_t())) {
      throw InternalInconsistencyError(
          "partition_sum: non-integral term at p=" + std::to_string(p) +
          " k=" + std::to_string(k));
    }
    Integer term;
    mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), den.get_mpz_t());
    sum += term;
  }
  return sum;
}

uint64_t count_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  uint64_t cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

// Counts set partitions with exactly k blocks via restricted growth strings.
uint64_t count_partitions(uint64_t n, uint64_t k) {
  std::vector<uint64_t> rgs(n, 0);
  uint64_t count = 0;
  auto rec = [&](auto&& self, uint64_t pos, uint64_t max_used) -> void {
    if (pos == n) {
      if (max_used == k) ++count;
      return;
    }
    for (uint64_t b = 0; b <= max_used && b < k; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(max_used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

Integer stirling1_partition_sum(uint64_t p, uint64_t k) {
  return partition_sum(p, k, /*second_kind=*/false);
}

Integer stirling2_partition_sum(uint64_t p, uint64_t k) {
  return partition_sum(p, k, /*second_kind=*/true);
}

Integer stirling_bruteforce(BruteforceKind kind, uint64_t n, uint64_t k) {
  if (n < 1 || n > kBruteforceLimit) {
    throw std::invalid_argument("stirling_bruteforce: n must be in 1..9");
  }
  if (k > n || (kind == BruteforceKind::second && k < 1)) {
    throw std::invalid_argument("stirling_bruteforce: k out of range");
  }
  if (kind == BruteforceKind::second) {
    return Integer(static_cast<unsigned long>(count_partitions(n, k)));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t count = 0;
  do {
    if (count_cycles(perm) == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Integer(static_cast<unsigned long>(count));
}

}  // namespace dold
