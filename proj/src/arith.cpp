#include "dold/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "dold/errors.hpp"

namespace dold {

Integer integer_from_decimal(const std::string& text) {
  // mpz_class(string) aborts on garbage, so validate via the C interface.
  mpz_t v;
  mpz_init(v);
  if (mpz_set_str(v, text.c_str(), 10) != 0) {
    mpz_clear(v);
    throw IngestError("not a decimal integer: '" + text + "'");
  }
  Integer out(v);
  mpz_clear(v);
  return out;
}

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (num_ == 0) den_ = 1;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PrimeSieve::PrimeSieve(uint64_t bound) : bound_(bound) {
  if (bound_ < 1) throw std::invalid_argument("PrimeSieve: bound must be >= 1");
  flags_.assign(bound_ + 1, true);
  flags_[0] = false;
  flags_[1] = false;
  for (uint64_t i = 2; i * i <= bound_; ++i) {
    if (!flags_[i]) continue;
    for (uint64_t j = i * i; j <= bound_; j += i) flags_[j] = false;
  }
  for (uint64_t i = 2; i <= bound_; ++i) {
    if (flags_[i]) primes_.push_back(i);
  }
}

bool PrimeSieve::is_prime(uint64_t n) const {
  if (n > bound_) {
    throw std::out_of_range("PrimeSieve: query above bound, use extended()");
  }
  return flags_[n];
}

std::vector<uint64_t> PrimeSieve::primes_up_to(uint64_t n) const {
  if (n > bound_) {
    throw std::out_of_range("PrimeSieve: query above bound, use extended()");
  }
  std::vector<uint64_t> out;
  for (uint64_t p : primes_) {
    if (p > n) break;
    out.push_back(p);
  }
  return out;
}

PrimeSieve PrimeSieve::extended(uint64_t new_bound) const {
  return PrimeSieve(new_bound > bound_ ? new_bound : bound_);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

int mobius(uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  auto strip = [&](uint64_t p) {
    if (n % p != 0) return true;
    n /= p;
    if (n % p == 0) return false;  // squared factor
    sign = -sign;
    return true;
  };
  if (!strip(2) || !strip(3)) return 0;
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (!strip(d) || !strip(d + 2)) return 0;
  }
  if (n > 1) sign = -sign;  // remaining prime cofactor
  return sign;
}

long p_adic_valuation(const Integer& x, uint64_t p) {
  if (x == 0) throw std::invalid_argument("p_adic_valuation: x must be nonzero");
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("p_adic_valuation: p must be prime");
  }
  Integer rest;
  Integer pz(static_cast<unsigned long>(p));
  mp_bitcnt_t v =
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return static_cast<long>(v);
}

long p_adic_norm_exponent(const Rational& x, uint64_t p) {
  if (x.is_zero()) {
    throw std::invalid_argument("p_adic_norm_exponent: x must be nonzero");
  }
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("p_adic_norm_exponent: p must be prime");
  }
  long num_v = p_adic_valuation(x.num(), p);
  long den_v = x.den() == 1 ? 0 : p_adic_valuation(x.den(), p);
  return num_v - den_v;
}

namespace {

// Trial division cannot certify factors above this without excessive work;
// reachable inputs (denominator lcms, factorials) only carry small primes.
constexpr uint64_t kTrialCap = 1u << 20;

void strip_factor(Integer& m, uint64_t p,
                  std::vector<std::pair<uint64_t, unsigned>>& out) {
  if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
  unsigned e = 0;
  do {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++e;
  } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
  out.emplace_back(p, e);
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> factorize(const Integer& m) {
  if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
  std::vector<std::pair<uint64_t, unsigned>> out;
  Integer rest = m;
  strip_factor(rest, 2, out);
  strip_factor(rest, 3, out);
  uint64_t d = 5;
  for (; d <= kTrialCap; d += 6) {
    if (rest == 1 || mpz_cmp_ui(rest.get_mpz_t(), d * d) < 0) break;
    strip_factor(rest, d, out);
    strip_factor(rest, d + 2, out);
  }
  if (rest > 1) {
    // All candidates < d were stripped, so rest < d*d (or <= cap^2 when the
    // loop ran out) certifies the cofactor prime.
    bool certified = mpz_cmp_ui(rest.get_mpz_t(), d * d) < 0 ||
                     mpz_cmp_ui(rest.get_mpz_t(), kTrialCap * kTrialCap) <= 0;
    if (certified && mpz_fits_ulong_p(rest.get_mpz_t())) {
      out.emplace_back(mpz_get_ui(rest.get_mpz_t()), 1);
    } else {
      throw std::invalid_argument(
          "factorize: cofactor exceeds trial-division range: " +
          rest.get_str());
    }
  }
  return out;
}

Integer radical(const Integer& m) {
  if (m < 1) throw std::invalid_argument("radical: m must be >= 1");
  Integer out = 1;
  for (const auto& [p, e] : factorize(m)) out *= Integer(static_cast<unsigned long>(p));
  return out;
}

Integer falling_factorial(const Integer& x, uint64_t n) {
  Integer out = 1;
  Integer term = x;
  for (uint64_t i = 0; i < n; ++i) {
    out *= term;
    term -= 1;
  }
  return out;
}

Integer binomial(uint64_t n, uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer power(const Integer& base, uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer lcm_all(std::span<const Integer> values) {
  Integer out = 1;
  for (const Integer& v : values) {
    if (v == 0) throw std::invalid_argument("lcm_all: zero entry");
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_mpz_t());
  }
  return out;
}

}  // namespace dold
