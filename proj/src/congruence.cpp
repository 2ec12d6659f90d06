#include "dold/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dold/errors.hpp"
#include "dold/transforms.hpp"

namespace dold {

namespace {

void require_prime(uint64_t p, const char* who) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be prime");
  }
}

uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

// (-ceil(k/p)) mod p in canonical form.
uint64_t lemma3_expected(uint64_t p, uint64_t k) {
  uint64_t m = ceil_div(k, p) % p;
  return (p - m) % p;
}

uint64_t lemma4_expected(uint64_t p, uint64_t k) { return ceil_div(k, p) % p; }

}  // namespace

uint64_t lemma3_residue(uint64_t p, uint64_t k) {
  require_prime(p, "lemma3_residue");
  if (k < 1) throw std::invalid_argument("lemma3_residue: k >= 1");
  uint64_t computed = stirling1_mod(p + k - 1, k, p);
  if (computed != lemma3_expected(p, k)) {
    throw InternalInconsistencyError(
        "lemma3_residue: recurrence residue disagrees with -ceil(k/p) at p=" +
        std::to_string(p) + " k=" + std::to_string(k));
  }
  return computed;
}

bool lemma3_one_criterion(uint64_t p, uint64_t k) {
  require_prime(p, "lemma3_one_criterion");
  if (k < 1) throw std::invalid_argument("lemma3_one_criterion: k >= 1");
  uint64_t r = k % (p * p);
  return r >= (p - 2) * p + 1 && r <= (p - 1) * p;
}

uint64_t lemma4_residue(uint64_t p, uint64_t k) {
  require_prime(p, "lemma4_residue");
  if (k < 1) throw std::invalid_argument("lemma4_residue: k >= 1");
  uint64_t computed = stirling2_mod(p + k - 1, k, p);
  Integer binom_mod = binomial(p + k - 1, p) % Integer(static_cast<unsigned long>(p));
  if (computed != lemma4_expected(p, k) ||
      binom_mod != Integer(static_cast<unsigned long>(computed))) {
    throw InternalInconsistencyError(
        "lemma4_residue: stirling/binomial/ceil(k/p) residues disagree at p=" +
        std::to_string(p) + " k=" + std::to_string(k));
  }
  return computed;
}

bool lemma4_one_criterion(uint64_t p, uint64_t k) {
  require_prime(p, "lemma4_one_criterion");
  if (k < 1) throw std::invalid_argument("lemma4_one_criterion: k >= 1");
  uint64_t r = k % (p * p);
  return r >= 1 && r <= p;
}

namespace {

template <typename RowFn, typename ExpectedFn, typename CriterionFn>
LemmaSweepResult lemma_sweep(uint64_t p, uint64_t k_max, RowFn row_fn,
                             ExpectedFn expected_fn, CriterionFn criterion_fn) {
  LemmaSweepResult result;
  result.p = p;
  result.k_max = k_max;
  // One shared triangle: n - k = p - 1 throughout, so row p+k_max-1 with
  // columns up to k_max covers every k.
  for (uint64_t k = 1; k <= k_max; ++k) {
    uint64_t computed = row_fn(k);
    bool ok = computed == expected_fn(p, k) &&
              criterion_fn(p, k) == (computed == 1 % p);
    ++result.cases;
    if (!ok) {
      ++result.failures;
      if (!result.first_failure_k) result.first_failure_k = k;
    }
  }
  return result;
}

}  // namespace

LemmaSweepResult lemma3_sweep(uint64_t p, uint64_t k_max) {
  require_prime(p, "lemma3_sweep");
  // Residues for all k at once: one rolling pass storing row p+k-1 column k
  // would still be quadratic per k, so walk rows once and collect the
  // diagonal n = p+k-1.
  std::vector<uint64_t> diag(k_max + 1, 0);
  {
    std::vector<uint64_t> row(k_max + 1, 0);
    row[0] = 1 % p;
    for (uint64_t m = 1; m <= p + k_max - 1; ++m) {
      uint64_t hi = std::min(m, k_max);
      uint64_t mult = (m - 1) % p;
      for (uint64_t j = hi; j >= 1; --j) {
        row[j] = ((mult * row[j]) % p + row[j - 1]) % p;
      }
      row[0] = 0;
      if (m >= p && m - p + 1 <= k_max) diag[m - p + 1] = row[m - p + 1];
    }
  }
  return lemma_sweep(
      p, k_max, [&](uint64_t k) { return diag[k]; }, lemma3_expected,
      lemma3_one_criterion);
}

LemmaSweepResult lemma4_sweep(uint64_t p, uint64_t k_max) {
  require_prime(p, "lemma4_sweep");
  std::vector<uint64_t> diag(k_max + 1, 0);
  {
    std::vector<uint64_t> row(k_max + 1, 0);
    row[0] = 1 % p;
    for (uint64_t m = 1; m <= p + k_max - 1; ++m) {
      uint64_t hi = std::min(m, k_max);
      for (uint64_t j = hi; j >= 1; --j) {
        row[j] = (((j % p) * row[j]) % p + row[j - 1]) % p;
      }
      row[0] = 0;
      if (m >= p && m - p + 1 <= k_max) diag[m - p + 1] = row[m - p + 1];
    }
  }
  // triple agreement: recurrence residue, C(p+k-1, p), and ceil(k/p)
  auto expected = [](uint64_t p_, uint64_t k) {
    uint64_t from_binomial =
        mpz_fdiv_ui(binomial(p_ + k - 1, p_).get_mpz_t(),
                    static_cast<unsigned long>(p_));
    uint64_t from_ceil = lemma4_expected(p_, k);
    return from_binomial == from_ceil ? from_ceil : p_;  // p_ never matches
  };
  return lemma_sweep(
      p, k_max, [&](uint64_t k) { return diag[k]; }, expected,
      lemma4_one_criterion);
}

std::vector<WitnessCertificate> witness_prime_first_kind(uint64_t k,
                                                         uint64_t prime_bound) {
  if (k < 1) throw std::invalid_argument("witness_prime_first_kind: k >= 1");
  PrimeSieve sieve(std::max<uint64_t>(prime_bound, 2));
  std::vector<WitnessCertificate> out;
  for (uint64_t p : sieve.primes_up_to(prime_bound)) {
    if (p < 2 || (p - 2) * p < k) continue;
    // The sufficient condition k <= (p-2)p must exclude the residue-1 window;
    // cross-check via the criterion before trusting the residue.
    if (lemma3_one_criterion(p, k)) {
      throw InternalInconsistencyError(
          "witness_prime_first_kind: k <= (p-2)p but criterion window hit");
    }
    WitnessCertificate cert;
    cert.k = k;
    cert.p = p;
    cert.kind = StirlingKind::first_unsigned;
    cert.residue = lemma3_residue(p, k);
    if (cert.residue == 1) {
      throw InternalInconsistencyError(
          "witness_prime_first_kind: residue 1 despite k <= (p-2)p");
    }
    // Exact arithmetic certificate: nu_p of (1/p)(A_p - A_1) must be -1.
    Integer a_p = stirling1_unsigned(p + k - 1, k);
    Integer a_1 = stirling1_unsigned(k, k);
    Rational orbit(a_p - a_1, Integer(static_cast<unsigned long>(p)));
    cert.orbit_valuation = p_adic_norm_exponent(orbit, p);
    if (cert.orbit_valuation != -1) {
      throw InternalInconsistencyError(
          "witness_prime_first_kind: orbit valuation is not -1");
    }
    out.push_back(cert);
  }
  return out;
}

uint64_t witness_prime_second_kind(uint64_t k) {
  if (k < 3) {
    throw std::invalid_argument("witness_prime_second_kind: k >= 3");
  }
  for (uint64_t p = 2; p < k; ++p) {
    if (!is_prime_u64(p)) continue;
    if (p * p < k) continue;  // need sqrt(k) <= p
    if (lemma4_one_criterion(p, k)) {
      throw InternalInconsistencyError(
          "witness_prime_second_kind: criterion true inside (p, p^2]");
    }
    if (lemma4_residue(p, k) == 1) {
      throw InternalInconsistencyError(
          "witness_prime_second_kind: residue 1 inside (p, p^2]");
    }
    return p;
  }
  // Bertrand's postulate guarantees a prime in [sqrt(k), k) for k >= 3.
  throw InternalInconsistencyError(
      "witness_prime_second_kind: no prime in [sqrt(k), k)");
}

SigmaOrbitResult sigma_orbit_oracle(uint64_t p, uint64_t a, uint64_t b) {
  require_prime(p, "sigma_orbit_oracle");
  if (a < 1 || b >= p) {
    throw std::invalid_argument("sigma_orbit_oracle: need a >= 1, 0 <= b < p");
  }
  uint64_t size = a * p + b;
  if (size > 20) {
    throw std::invalid_argument("sigma_orbit_oracle: ap+b must be <= 20");
  }

  // sigma from the block picture: a cycles of length p on 1..ap, b fixed
  // points above ap.
  std::vector<uint64_t> sigma(size + 1, 0);
  for (uint64_t j = 1; j <= size; ++j) {
    if (j > a * p) {
      sigma[j] = j;
    } else if (j % p != 0) {
      sigma[j] = j + 1;
    } else {
      sigma[j] = j - p + 1;
    }
  }

  SigmaOrbitResult result;
  result.p = p;
  result.a = a;
  result.b = b;

  // sigma^p == identity, checked pointwise.
  result.power_is_identity = true;
  for (uint64_t j = 1; j <= size; ++j) {
    uint64_t x = j;
    for (uint64_t step = 0; step < p; ++step) x = sigma[x];
    if (x != j) result.power_is_identity = false;
  }
  if (!result.power_is_identity) {
    throw InternalInconsistencyError("sigma_orbit_oracle: sigma^p != id");
  }

  // Enumerate all p-subsets as sorted index vectors and count fixed ones.
  std::vector<uint64_t> subset(p);
  std::iota(subset.begin(), subset.end(), 1);
  uint64_t fixed = 0;
  uint64_t total = 0;
  auto advance = [&]() {
    // next combination of {1..size} choose p
    uint64_t i = p;
    while (i > 0 && subset[i - 1] == size - p + i) --i;
    if (i == 0) return false;
    ++subset[i - 1];
    for (uint64_t j = i; j < p; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };
  do {
    ++total;
    std::vector<uint64_t> image(p);
    for (uint64_t i = 0; i < p; ++i) image[i] = sigma[subset[i]];
    std::sort(image.begin(), image.end());
    if (image == subset) ++fixed;
  } while (advance());

  result.fixed_subsets = fixed;
  result.subset_count = total;
  result.residue_mod_p = fixed % p;
  Integer binom = binomial(size, p);
  result.binomial_mod_p =
      mpz_fdiv_ui(binom.get_mpz_t(), static_cast<unsigned long>(p));

  if (binom != Integer(static_cast<unsigned long>(total))) {
    throw InternalInconsistencyError(
        "sigma_orbit_oracle: subset enumeration miscount");
  }
  if (fixed != a) {
    throw InternalInconsistencyError(
        "sigma_orbit_oracle: fixed-subset count differs from a");
  }
  if (result.residue_mod_p != a % p ||
      result.binomial_mod_p != result.residue_mod_p) {
    throw InternalInconsistencyError(
        "sigma_orbit_oracle: residue disagreement");
  }
  // Every non-fixed orbit has length exactly p, so the counts must tile.
  if ((total - fixed) % p != 0) {
    throw InternalInconsistencyError(
        "sigma_orbit_oracle: non-fixed subsets do not tile into p-orbits");
  }
  return result;
}

bool scaled_dold_claim_check(uint64_t k, uint64_t p, uint64_t n) {
  require_prime(p, "scaled_dold_claim_check");
  if (k < 1 || n < 1 || n % p != 0) {
    throw std::invalid_argument(
        "scaled_dold_claim_check: need k >= 1 and p | n");
  }
  Integer sum = 0;
  for (uint64_t d : divisors(n)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer term = stirling2_scaled(n / d + k - 1, k);
    if (mu == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  long e = p_adic_valuation(Integer(static_cast<unsigned long>(n)), p);
  Integer modulus = power(Integer(static_cast<unsigned long>(p)),
                          static_cast<uint64_t>(e));
  return mpz_divisible_p(sum.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

}  // namespace dold
