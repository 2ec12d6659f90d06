#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dold {

// All integer arithmetic is arbitrary precision; values reach thousands of
// digits at the default table horizon and nothing here may silently overflow.
using Integer = mpz_class;

Integer integer_from_decimal(const std::string& text);

// Rational in lowest terms with positive denominator, normalized eagerly on
// construction so denom() is always canonical.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

inline Integer denom(const Rational& x) { return x.den(); }

// Immutable Eratosthenes sieve; shareable across threads after construction.
// "Extension" means building a new sieve, see extended().
class PrimeSieve {
 public:
  static constexpr uint64_t kDefaultBound = 100000;

  explicit PrimeSieve(uint64_t bound = kDefaultBound);

  uint64_t bound() const { return bound_; }
  bool is_prime(uint64_t n) const;  // requires n <= bound()
  const std::vector<uint64_t>& primes() const { return primes_; }
  std::vector<uint64_t> primes_up_to(uint64_t n) const;
  PrimeSieve extended(uint64_t new_bound) const;

 private:
  uint64_t bound_;
  std::vector<bool> flags_;
  std::vector<uint64_t> primes_;
};

// Trial-division primality for word-sized n.
bool is_prime_u64(uint64_t n);

// Classical Moebius function; rejects n = 0.
int mobius(uint64_t n);

// Exponent of p in x; requires x != 0 and p prime.
long p_adic_valuation(const Integer& x, uint64_t p);

// alpha_p with |x|_p = p^(-alpha_p), i.e. nu_p(num) - nu_p(den).
// Rejects x = 0 (norm exponent undefined) and composite p.
long p_adic_norm_exponent(const Rational& x, uint64_t p);

// Factorization as (prime, exponent) pairs with primes ascending, m >= 1.
// Trial division only: throws if a cofactor beyond the candidate cap remains.
std::vector<std::pair<uint64_t, unsigned>> factorize(const Integer& m);

// Greatest square-free divisor of m, m >= 1.
Integer radical(const Integer& m);

// x(x-1)...(x-n+1); empty product for n = 0.
Integer falling_factorial(const Integer& x, uint64_t n);

Integer binomial(uint64_t n, uint64_t k);  // 0 when k > n
Integer factorial(uint64_t n);
Integer power(const Integer& base, uint64_t exp);

// lcm of positive integers; empty -> 1; rejects zero entries.
Integer lcm_all(std::span<const Integer> values);

}  // namespace dold
