#include "dold/conjectures.hpp"

#include <algorithm>
#include <stdexcept>

#include "dold/errors.hpp"

namespace dold {

const FailureResult& SecondKindScanContext::failure(uint64_t k,
                                                    uint64_t horizon) {
  auto key = std::make_pair(k, horizon);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const IntegerSequencePrefix& prefix =
      prefixes_.get(StirlingKind::second, k, horizon);
  return memo_.emplace(key, failure_truncated(prefix)).first->second;
}

std::vector<RepairTableRow> repair_table(SecondKindScanContext& ctx,
                                         uint64_t k_max, uint64_t horizon) {
  if (k_max < 1 || horizon < 1) {
    throw std::invalid_argument("repair_table: k_max >= 1 and horizon >= 1");
  }
  std::vector<RepairTableRow> rows;
  rows.reserve(k_max);
  for (uint64_t k = 1; k <= k_max; ++k) {
    RepairTableRow row;
    row.k = k;
    row.failure = ctx.failure(k, horizon).value;
    row.factorization = factorize(row.failure);
    Integer reassembled = 1;
    for (const auto& [p, e] : row.factorization) {
      reassembled *= power(Integer(static_cast<unsigned long>(p)), e);
    }
    Integer bound = factorial(k - 1);
    if (reassembled != row.failure ||
        !mpz_divisible_p(bound.get_mpz_t(), row.failure.get_mpz_t())) {
      throw InternalInconsistencyError(
          "repair_table: row invariant broken at k=" + std::to_string(k));
    }
    row.ratio = Rational(row.failure, radical(bound));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string uint_str(uint64_t v) { return std::to_string(v); }

// sqrt(k) <= p expressed in integers.
bool in_sqrt_window(uint64_t p, uint64_t k) { return p * p >= k && p < k; }

void add_case(ConjectureReport& report, std::string label, CaseStatus status,
              std::string detail) {
  if (status == CaseStatus::fail) report.counterexamples.push_back(label);
  report.cases.push_back({std::move(label), status, std::move(detail)});
}

}  // namespace

ConjectureReport scan_conjecture1(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon) {
  ConjectureReport report;
  report.conjecture = "1";
  report.range = "k <= " + uint_str(k_max) + ", primes p < k";
  report.horizon = horizon;
  for (uint64_t k = 1; k <= k_max; ++k) {
    bool any = false;
    for (uint64_t p = 2; p < k; ++p) {
      if (!is_prime_u64(p)) continue;
      any = true;
      const Integer& failure = ctx.failure(k, horizon).value;
      bool divides = mpz_divisible_ui_p(failure.get_mpz_t(), p) != 0;
      std::string label = "k=" + uint_str(k) + " p=" + uint_str(p);
      std::string detail = divides ? "p | failure'" : "p does not divide failure'";
      if (in_sqrt_window(p, k)) detail += " (proven range [sqrt(k), k))";
      add_case(report, label, divides ? CaseStatus::pass : CaseStatus::fail,
               detail);
    }
    if (!any) {
      add_case(report, "k=" + uint_str(k), CaseStatus::vacuous,
               "no primes below k");
    }
  }
  return report;
}

ConjectureReport scan_conjecture2(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon) {
  ConjectureReport report;
  report.conjecture = "2";
  report.range = "k <= " + uint_str(k_max) + ", primes p in [sqrt(k), k)";
  report.horizon = horizon;
  for (uint64_t k = 1; k <= k_max; ++k) {
    for (uint64_t p = 2; p < k; ++p) {
      if (!is_prime_u64(p)) continue;
      std::string label = "k=" + uint_str(k) + " p=" + uint_str(p);
      if (!in_sqrt_window(p, k)) {
        add_case(report, label, CaseStatus::vacuous,
                 "p below sqrt(k), outside the claim");
        continue;
      }
      const Integer& failure = ctx.failure(k, horizon).value;
      long v = p_adic_valuation(failure, p);
      bool proven_range = 2 * p > k - 1;  // p in ((k-1)/2, k)
      std::string detail = "nu_p(failure') = " + std::to_string(v);
      if (proven_range) detail += " (proven range ((k-1)/2, k))";
      add_case(report, label, v == 1 ? CaseStatus::pass : CaseStatus::fail,
               detail);
    }
  }
  return report;
}

ConjectureReport scan_conjecture3(SecondKindScanContext& ctx, uint64_t k_max,
                                  uint64_t horizon) {
  ConjectureReport report;
  report.conjecture = "3";
  report.range = "k <= " + uint_str(k_max);
  report.horizon = horizon;
  std::vector<Rational> ratios;
  for (uint64_t k = 1; k <= k_max; ++k) {
    const Integer& failure = ctx.failure(k, horizon).value;
    Rational ratio(failure, radical(factorial(k - 1)));
    ratios.push_back(ratio);
    add_case(report, "k=" + uint_str(k), CaseStatus::evidence,
             "failure'/rad((k-1)!) = " + ratio.str());
  }
  // Tail minima: min over k' >= k. A limit claim gets evidence, no verdict.
  std::vector<Rational> tail_min(ratios.size());
  for (size_t i = ratios.size(); i-- > 0;) {
    tail_min[i] = ratios[i];
    if (i + 1 < ratios.size()) {
      const Rational& next = tail_min[i + 1];
      // compare a/b < c/d via ad < cb (denominators positive)
      if (next.num() * tail_min[i].den() < tail_min[i].num() * next.den()) {
        tail_min[i] = next;
      }
    }
  }
  for (size_t i = 0; i < tail_min.size(); ++i) {
    add_case(report, "tail k>=" + uint_str(i + 1), CaseStatus::evidence,
             "min ratio over tail = " + tail_min[i].str());
  }
  return report;
}

ConjectureReport scan_conjecture4(SecondKindScanContext& ctx, char part,
                                  uint64_t p_max, uint64_t j_max,
                                  uint64_t k_cap, uint64_t horizon) {
  if (part < 'a' || part > 'd') {
    throw std::invalid_argument("scan_conjecture4: part must be a..d");
  }
  ConjectureReport report;
  report.conjecture = std::string("4") + part;
  report.range = "p <= " + uint_str(p_max) + ", j <= " + uint_str(j_max) +
                 ", k <= " + uint_str(k_cap);
  report.horizon = horizon;
  for (uint64_t p = 2; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    uint64_t j_lo = (part == 'a') ? 1 : (part == 'd' ? 1 : 2);
    uint64_t j_hi = (part == 'a') ? 1 : j_max;
    for (uint64_t j = j_lo; j <= j_hi; ++j) {
      // k = p^j (+1); overflow-safe because k_cap bounds the usable range
      uint64_t pj = 1;
      bool overflow = false;
      for (uint64_t i = 0; i < j; ++i) {
        if (pj > k_cap) {
          overflow = true;
          break;
        }
        pj *= p;
      }
      if (overflow || pj + 1 > k_cap) continue;
      std::string label = "p=" + uint_str(p) + " j=" + uint_str(j);
      const Integer& f_pj = ctx.failure(pj, horizon).value;
      const Integer& f_pj1 = ctx.failure(pj + 1, horizon).value;
      switch (part) {
        case 'a': {
          Integer rhs = Integer(static_cast<unsigned long>(p)) * f_pj;
          bool ok = f_pj1 == rhs;
          add_case(report, label, ok ? CaseStatus::pass : CaseStatus::fail,
                   "failure'(k=" + uint_str(pj + 1) + ") = " + f_pj1.get_str() +
                       ", p * failure'(k=" + uint_str(pj) + ") = " +
                       rhs.get_str());
          break;
        }
        case 'b': {
          Integer rhs =
              power(Integer(static_cast<unsigned long>(p)), j - 1) * f_pj;
          bool ok = mpz_divisible_p(rhs.get_mpz_t(), f_pj1.get_mpz_t()) != 0;
          add_case(report, label, ok ? CaseStatus::pass : CaseStatus::fail,
                   "failure'(k=" + uint_str(pj + 1) + ") = " + f_pj1.get_str() +
                       (ok ? " divides " : " does not divide ") +
                       rhs.get_str());
          break;
        }
        case 'c': {
          long v = p_adic_valuation(f_pj, p);
          add_case(report, label, v == 1 ? CaseStatus::pass : CaseStatus::fail,
                   "nu_p(failure'(k=" + uint_str(pj) + ")) = " +
                       std::to_string(v));
          break;
        }
        case 'd': {
          long v = p_adic_valuation(f_pj1, p);
          add_case(report, label,
                   v == static_cast<long>(j) ? CaseStatus::pass
                                             : CaseStatus::fail,
                   "nu_p(failure'(k=" + uint_str(pj + 1) + ")) = " +
                       std::to_string(v) + ", expected " + uint_str(j));
          break;
        }
        default:
          break;
      }
    }
  }
  return report;
}

}  // namespace dold
