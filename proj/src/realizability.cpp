#include "dold/realizability.hpp"

#include <stdexcept>

#include "dold/errors.hpp"
#include "dold/transforms.hpp"

namespace dold {

DoldReport dold_check(const IntegerSequencePrefix& A) {
  DoldReport report;
  report.horizon = A.size();
  OrbitCountPrefix orbits = orbit_counts(A);
  report.divisible.reserve(A.size());
  report.sign_ok.reserve(A.size());
  report.denominators.reserve(A.size());
  for (uint64_t n = 1; n <= A.size(); ++n) {
    const Rational& q = orbits.at(n);
    bool divisible = q.is_integer();
    bool sign = !q.is_negative();
    report.divisible.push_back(divisible);
    report.sign_ok.push_back(sign);
    report.denominators.push_back(q.den());
    if (!divisible && !report.first_dold_violation) {
      report.first_dold_violation = n;
    }
    if (!sign && !report.first_sign_violation) {
      report.first_sign_violation = n;
    }
  }
  return report;
}

GrowthResult growth_sufficiency(const IntegerSequencePrefix& A) {
  if (A.size() < 2) {
    throw std::invalid_argument("growth_sufficiency: need N >= 2");
  }
  GrowthResult result;
  for (uint64_t n = 2; n <= A.size(); ++n) {
    if (A.at(n) < A.at(n - 1)) {
      result.first_counterexample = n;
      return result;
    }
  }
  for (uint64_t n = 1; 2 * n <= A.size(); ++n) {
    if (A.at(2 * n) < Integer(static_cast<unsigned long>(n)) * A.at(n)) {
      result.first_counterexample = n;
      return result;
    }
  }
  result.ok = true;
  // The growth hypothesis implies the sign condition; verify instead of
  // trusting the implication.
  for (const Integer& t : mobius_transform(A)) {
    if (t < 0) {
      throw InternalInconsistencyError(
          "growth_sufficiency: growth holds but sign condition fails");
    }
  }
  return result;
}

FailureResult failure_truncated(const IntegerSequencePrefix& A) {
  FailureResult result;
  result.horizon = A.size();
  OrbitCountPrefix orbits = orbit_counts(A);

  std::vector<Integer> denominators;
  denominators.reserve(A.size());
  for (uint64_t n = 1; n <= A.size(); ++n) {
    const Rational& q = orbits.at(n);
    denominators.push_back(q.den());
    if (q.is_negative()) result.sign_ok = false;
  }
  result.value = lcm_all(denominators);

  // Witness map: for each maximal prime power p^e | lcm, the smallest n whose
  // denominator has p-adic valuation exactly e.
  for (const auto& [p, e] : factorize(result.value)) {
    PrimePowerWitness w{p, e, 0};
    for (uint64_t n = 1; n <= A.size(); ++n) {
      if (denominators[n - 1] == 1) continue;
      if (p_adic_valuation(denominators[n - 1], p) ==
          static_cast<long>(e)) {
        w.index = n;
        break;
      }
    }
    if (w.index == 0) {
      throw InternalInconsistencyError(
          "failure_truncated: no witness index for prime power");
    }
    result.witnesses.push_back(w);
  }
  return result;
}

IntegerSequencePrefix repair(const IntegerSequencePrefix& A,
                             const Integer& m) {
  if (m < 1) throw std::invalid_argument("repair: multiplier must be >= 1");
  std::vector<Integer> values;
  values.reserve(A.size());
  for (const Integer& v : A.values()) values.push_back(m * v);
  std::string label =
      m == 1 ? A.label() : m.get_str() + " * (" + A.label() + ")";
  return IntegerSequencePrefix(std::move(values), label,
                               {SequenceFamily::external, 0});
}

std::vector<Integer> realize(const IntegerSequencePrefix& A) {
  OrbitCountPrefix orbits = orbit_counts(A);
  std::vector<Integer> out;
  out.reserve(A.size());
  for (uint64_t n = 1; n <= A.size(); ++n) {
    const Rational& q = orbits.at(n);
    if (!q.is_integer()) {
      throw NotRealizableError(n, RealizeFailureReason::non_integral);
    }
    if (q.is_negative()) {
      throw NotRealizableError(n, RealizeFailureReason::negative);
    }
    out.push_back(q.num());
  }
  return out;
}

std::optional<uint64_t> verify_scaled_second_kind_dold(
    uint64_t k, const Integer& multiplier, uint64_t horizon) {
  if (k < 1) throw std::invalid_argument("verify: k >= 1");
  if (multiplier < 1) throw std::invalid_argument("verify: multiplier >= 1");
  Integer km1fact = factorial(k - 1);
  if (!mpz_divisible_p(km1fact.get_mpz_t(), multiplier.get_mpz_t())) {
    throw std::invalid_argument("verify: multiplier must divide (k-1)!");
  }
  // With C the (k-1)!-scaled sequence and t = (k-1)!/multiplier,
  // n | (mu*(multiplier*S))(n) iff (mu*C)(n) == 0 mod n*t.
  Integer t;
  mpz_divexact(t.get_mpz_t(), km1fact.get_mpz_t(), multiplier.get_mpz_t());
  std::vector<Integer> coeff(k + 1);
  for (uint64_t j = 1; j <= k; ++j) coeff[j] = binomial(k - 1, j - 1);

  for (uint64_t n = 1; n <= horizon; ++n) {
    Integer modulus = Integer(static_cast<unsigned long>(n)) * t;
    if (modulus == 1) continue;
    Integer acc = 0;
    for (uint64_t d : divisors(n)) {
      int mu = mobius(n / d);
      if (mu == 0) continue;
      // C_d mod modulus via the scaled closed form
      Integer cd = 0;
      for (uint64_t j = 1; j <= k; ++j) {
        Integer pw;
        Integer base(static_cast<unsigned long>(j));
        mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), d + k - 2,
                    modulus.get_mpz_t());
        pw *= coeff[j];
        if ((k - j) % 2 == 0) {
          cd += pw;
        } else {
          cd -= pw;
        }
      }
      if (mu == 1) {
        acc += cd;
      } else {
        acc -= cd;
      }
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), modulus.get_mpz_t())) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace dold
