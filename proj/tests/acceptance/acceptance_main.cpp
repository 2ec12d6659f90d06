// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must be the CLI binary path. Set DOLD_ACCEPTANCE_EXTENDED=1
// to also reproduce table rows 15..40 (minutes instead of seconds).

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dold/cache.hpp"
#include "dold/congruence.hpp"
#include "dold/conjectures.hpp"
#include "dold/realizability.hpp"
#include "dold/reports.hpp"
#include "dold/stirling.hpp"
#include "dold/transforms.hpp"

using namespace dold;

namespace {

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;
  std::function<void(std::ostream&)> body;  // throws on failure
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure(message);
}

std::string g_cli_path;

std::string run_cli(const std::string& args) {
  std::string command = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int status = ::pclose(pipe);
  require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
          "CLI exited nonzero for: " + args);
  return output;
}

// Reference repair-factor rows, k = 1..40: value, factorization, ratio.
struct ReferenceRow {
  uint64_t k;
  unsigned long long value;
  std::vector<std::pair<uint64_t, unsigned>> factors;
  unsigned long long ratio;
};

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {1, 1, {}, 1},
      {2, 1, {}, 1},
      {3, 2, {{2, 1}}, 1},
      {4, 6, {{2, 1}, {3, 1}}, 1},
      {5, 12, {{2, 2}, {3, 1}}, 2},
      {6, 60, {{2, 2}, {3, 1}, {5, 1}}, 2},
      {7, 30, {{2, 1}, {3, 1}, {5, 1}}, 1},
      {8, 210, {{2, 1}, {3, 1}, {5, 1}, {7, 1}}, 1},
      {9, 840, {{2, 3}, {3, 1}, {5, 1}, {7, 1}}, 4},
      {10, 2520, {{2, 3}, {3, 2}, {5, 1}, {7, 1}}, 12},
      {11, 1260, {{2, 2}, {3, 2}, {5, 1}, {7, 1}}, 6},
      {12, 13860, {{2, 2}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, 6},
      {13, 13860, {{2, 2}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, 6},
      {14, 180180, {{2, 2}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}, 6},
      {15, 90090, {{2, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}, 3},
      {16, 30030, {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}, 1},
      {17, 240240, {{2, 4}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}, 8},
      {18,
       4084080,
       {{2, 4}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}},
       8},
      {19,
       6126120,
       {{2, 3}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}},
       12},
      {20,
       116396280,
       {{2, 3}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}},
       12},
      {21,
       58198140,
       {{2, 2}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}},
       6},
      {22,
       58198140,
       {{2, 2}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}},
       6},
      {23,
       29099070,
       {{2, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}},
       3},
      {24,
       669278610,
       {{2, 1},
        {3, 2},
        {5, 1},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       3},
      {25,
       892371480,
       {{2, 3},
        {3, 1},
        {5, 1},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       4},
      {26,
       4461857400ull,
       {{2, 3},
        {3, 1},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       20},
      {27,
       2230928700ull,
       {{2, 2},
        {3, 1},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       10},
      {28,
       20078358300ull,
       {{2, 2},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       90},
      {29,
       20078358300ull,
       {{2, 2},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1}},
       90},
      {30,
       582272390700ull,
       {{2, 2},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1}},
       90},
      {31,
       291136195350ull,
       {{2, 1},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1}},
       45},
      {32,
       9025222055850ull,
       {{2, 1},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       45},
      {33,
       144403552893600ull,
       {{2, 5},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       720},
      {34,
       48134517631200ull,
       {{2, 5},
        {3, 2},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       240},
      {35,
       24067258815600ull,
       {{2, 4},
        {3, 2},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       120},
      {36,
       24067258815600ull,
       {{2, 4},
        {3, 2},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       120},
      {37,
       36100888223400ull,
       {{2, 3},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1}},
       180},
      {38,
       1335732864265800ull,
       {{2, 3},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1},
        {37, 1}},
       180},
      {39,
       333933216066450ull,
       {{2, 1},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1},
        {37, 1}},
       45},
      {40,
       333933216066450ull,
       {{2, 1},
        {3, 3},
        {5, 2},
        {7, 1},
        {11, 1},
        {13, 1},
        {17, 1},
        {19, 1},
        {23, 1},
        {29, 1},
        {31, 1},
        {37, 1}},
       45},
  };
  return rows;
}

void check_reference_row_consistency() {
  for (const ReferenceRow& row : reference_rows()) {
    Integer product = 1;
    for (const auto& [p, e] : row.factors) {
      product *= power(Integer(static_cast<unsigned long>(p)), e);
    }
    require(product == Integer(static_cast<unsigned long>(row.value)),
            "reference row k=" + std::to_string(row.k) +
                ": factorization does not multiply back");
    Rational ratio(Integer(static_cast<unsigned long>(row.value)), radical(factorial(row.k - 1)));
    require(ratio == Rational(Integer(static_cast<unsigned long>(row.ratio))),
            "reference row k=" + std::to_string(row.k) + ": ratio mismatch");
  }
}

void compare_rows(const std::vector<RepairTableRow>& computed, uint64_t k_lo,
                  uint64_t k_hi) {
  for (const RepairTableRow& row : computed) {
    if (row.k < k_lo || row.k > k_hi) continue;
    const ReferenceRow& ref = reference_rows()[row.k - 1];
    require(ref.k == row.k, "reference table index skew");
    require(row.failure == Integer(static_cast<unsigned long>(ref.value)),
            "k=" + std::to_string(row.k) + ": value " + row.failure.get_str() +
                " != " + std::to_string(ref.value));
    require(row.factorization == ref.factors,
            "k=" + std::to_string(row.k) + ": factorization mismatch");
    require(row.ratio == Rational(Integer(static_cast<unsigned long>(ref.ratio))),
            "k=" + std::to_string(row.k) + ": ratio " + row.ratio.str() +
                " != " + std::to_string(ref.ratio));
  }
}

// Shared state: the table context carries every second-kind failure needed
// by criteria 3, 4 and 10.
PrefixProvider g_provider;
SecondKindScanContext g_ctx(g_provider);
double g_table_seconds = 0.0;

void criterion1(std::ostream& log) {
  std::string first = run_cli("seq --kind first --k 3 --n 4");
  require(first == "1 6 35 225\n", "first-kind fixture mismatch: " + first);
  std::string second = run_cli("seq --kind second --k 3 --n 4");
  require(second == "1 6 25 90\n", "second-kind fixture mismatch: " + second);
  log << "both fixture prefixes reproduced via the CLI";
}

void criterion2(std::ostream& log) {
  for (uint64_t k : {1, 2}) {
    auto report = dold_check(g_provider.get(StirlingKind::second, k, 2000));
    require(report.realizable_up_to_horizon(),
            "k=" + std::to_string(k) + " not realizable up to 2000");
  }
  const auto& prefix = g_provider.get(StirlingKind::second, 2, 2000);
  auto orbits = realize(prefix);
  auto rebuilt = fix_counts_from_orbits(orbits);
  for (uint64_t n = 1; n <= 2000; ++n) {
    Integer expected = power(Integer(2), n) - 1;
    require(rebuilt.at(n) == expected,
            "reconstruction != 2^n - 1 at n=" + std::to_string(n));
    require(prefix.at(n) == expected, "prefix != 2^n - 1");
  }
  log << "k=1,2 realizable to N=2000; k=2 orbits rebuild 2^n - 1";
}

void criterion3(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  auto rows = repair_table(g_ctx, 14, 3000);
  compare_rows(rows, 1, 14);
  g_table_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  log << "rows 1..14 match at N=3000";
  if (std::getenv("DOLD_ACCEPTANCE_EXTENDED")) {
    auto extended = repair_table(g_ctx, 40, 3000);
    compare_rows(extended, 15, 40);
    log << "; extended rows 15..40 match";
  }
}

void criterion4(std::ostream& log) {
  for (uint64_t k = 1; k <= 12; ++k) {
    const auto& prefix = g_provider.get(StirlingKind::second, k, 2000);
    auto result = failure_truncated(prefix);
    Integer bound = factorial(k - 1);
    require(mpz_divisible_p(bound.get_mpz_t(), result.value.get_mpz_t()),
            "k=" + std::to_string(k) + ": failure' does not divide (k-1)!");
    auto repaired = dold_check(repair(prefix, bound));
    require(!repaired.first_dold_violation,
            "k=" + std::to_string(k) + ": (k-1)! repair leaves a violation");
  }
  log << "failure' | (k-1)! and (k-1)!-repair passes, k <= 12, N=2000";
}

void criterion5(std::ostream& log) {
  PrimeSieve sieve(23);
  uint64_t cases = 0;
  for (uint64_t p : sieve.primes()) {
    auto three = lemma3_sweep(p, p * p);
    auto four = lemma4_sweep(p, p * p);
    require(three.failures == 0,
            "lemma 3 sweep failed at p=" + std::to_string(p));
    require(four.failures == 0,
            "lemma 4 sweep failed at p=" + std::to_string(p));
    cases += three.cases + four.cases;
  }
  log << cases << " residue/criterion cases, zero violations";
}

void criterion6(std::ostream& log) {
  for (uint64_t n = 1; n <= 8; ++n) {
    for (uint64_t k = 1; k <= n; ++k) {
      require(stirling_bruteforce(BruteforceKind::first, n, k) ==
                  stirling1_unsigned(n, k),
              "first-kind brute force mismatch");
      require(stirling_bruteforce(BruteforceKind::second, n, k) ==
                  stirling2(n, k),
              "second-kind brute force mismatch");
    }
  }
  for (uint64_t p : {2, 3, 5, 7}) {
    for (uint64_t k = 1; k <= 8; ++k) {
      require(stirling1_partition_sum(p, k) == stirling1_unsigned(p + k - 1, k),
              "first-kind partition sum mismatch");
      require(stirling2_partition_sum(p, k) == stirling2(p + k - 1, k),
              "second-kind partition sum mismatch");
    }
  }
  log << "exhaustive n <= 8 and partition sums p <= 7, k <= 8 agree";
}

void criterion7(std::ostream& log) {
  auto result = sigma_orbit_oracle(5, 3, 2);
  require(result.power_is_identity, "sigma^5 is not the identity");
  require(result.fixed_subsets == 3, "fixed subsets != 3");
  require(result.binomial_mod_p == 3, "C(17,5) mod 5 != 3");
  require(binomial(17, 5) == 6188, "C(17,5) != 6188");
  log << "sigma^5 = id, 3 fixed 5-subsets, C(17,5) = 3 mod 5";
}

void criterion8(std::ostream& log) {
  uint64_t total = 0;
  for (uint64_t k = 1; k <= 20; ++k) {
    auto certs = witness_prime_first_kind(k, 200);
    require(certs.size() >= 5,
            "k=" + std::to_string(k) + ": fewer than 5 certificates");
    // independent re-check through the prefix/transform path
    auto counts =
        orbit_counts(g_provider.get(StirlingKind::first_unsigned, k, 200));
    for (const WitnessCertificate& cert : certs) {
      require(cert.orbit_valuation == -1, "orbit valuation != -1");
      long denominator_valuation =
          p_adic_valuation(denom(counts.at(cert.p)), cert.p);
      require(denominator_valuation == 1,
              "denominator valuation at p != 1 for k=" + std::to_string(k));
    }
    total += certs.size();
  }
  log << total << " certificates over k <= 20, all with valuation 1";
}

void criterion9(std::ostream& log) {
  auto dir = std::filesystem::temp_directory_path() /
             ("dold_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  // Fibonacci by plain addition; squares sampled from the same run.
  std::vector<Integer> fib;  // fib[i-1] = F_i
  fib.reserve(40000);
  fib.emplace_back(1);
  fib.emplace_back(1);
  while (fib.size() < 40000) {
    fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  }
  {
    std::ofstream out(dir / "fib.txt");
    out << "# Fibonacci\n";
    for (uint64_t n = 1; n <= 200; ++n) {
      out << n << " " << fib[n - 1].get_str() << "\n";
    }
  }
  {
    std::ofstream out(dir / "fib_squares.txt");
    out << "# Fibonacci along squares\n";
    for (uint64_t n = 1; n <= 200; ++n) {
      out << n << " " << fib[n * n - 1].get_str() << "\n";
    }
  }

  auto fib_prefix = ingest_bfile(dir / "fib.txt");
  require(fib_prefix.at(3) == 2 && fib_prefix.at(12) == 144,
          "Fibonacci fixture generation is wrong");
  auto fib_failure = failure_truncated(fib_prefix);
  require(fib_failure.witnesses.size() >= 4,
          "Fibonacci truncated failure has fewer than 4 distinct primes");

  auto squares_prefix = ingest_bfile(dir / "fib_squares.txt");
  require(squares_prefix.at(2) == 3 && squares_prefix.at(3) == 34,
          "Fibonacci-squares fixture generation is wrong");
  auto squares_failure = failure_truncated(squares_prefix);
  require(squares_failure.value == 5,
          "Fibonacci-squares truncated failure != 5, got " +
              squares_failure.value.get_str());

  std::filesystem::remove_all(dir);
  log << "Fibonacci: " << fib_failure.witnesses.size()
      << " prime factors; squares-sampled failure = 5";
}

void criterion10(std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  auto report4a = scan_conjecture4(g_ctx, 'a', 11, 1, 14, 3000);
  require(report4a.all_pass(), "conjecture 4a fails at N=3000");
  uint64_t seen = report4a.cases.size();
  require(seen == 5, "expected cases p=2,3,5,7,11");

  auto report1 = scan_conjecture1(g_ctx, 14, 3000);
  require(report1.all_pass(), "conjecture 1 fails for k <= 14");

  // proven fragment of conjecture 2 (primes in ((k-1)/2, k)): valuation 1
  auto report2 = scan_conjecture2(g_ctx, 14, 3000);
  require(report2.all_pass(), "conjecture 2 window fails for k <= 14");
  bool proven_seen = false;
  for (const auto& c : report2.cases) {
    if (c.detail.find("proven range") != std::string::npos) {
      proven_seen = true;
      require(c.status == CaseStatus::pass, "proven-range case failed");
    }
  }
  require(proven_seen, "no proven-range cases scanned");
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  require(g_table_seconds + elapsed < 600.0,
          "criterion 3+10 runtime exceeded 10 minutes");
  log << "4a holds for p <= 11, conjecture 1 holds for k <= 14 (N=3000)";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: dold_acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  try {
    check_reference_row_consistency();
  } catch (const std::exception& e) {
    std::cerr << "reference data inconsistent: " << e.what() << "\n";
    return 2;
  }

  // extended table rows are hours-scale by the book; only the required
  // rows 1..14 carry the 10-minute budget (enforced again in criterion 10)
  double table_budget =
      std::getenv("DOLD_ACCEPTANCE_EXTENDED") ? 7200.0 : 600.0;

  std::vector<Criterion> criteria = {
      {1, "sequence fixtures via the CLI", 1.0, criterion1},
      {2, "realizability base cases k <= 2", 10.0, criterion2},
      {3, "repair-factor table rows 1..14 at N=3000", table_budget,
       criterion3},
      {4, "failure' divides (k-1)! and repairs, k <= 12", 300.0, criterion4},
      {5, "lemma 3 and 4 sweeps, p <= 23, k <= p^2", 300.0, criterion5},
      {6, "brute-force and partition-sum equivalence", 60.0, criterion6},
      {7, "sigma orbit oracle at p=5, a=3, b=2", 60.0, criterion7},
      {8, "first-kind witness certificates, k <= 20", 120.0, criterion8},
      {9, "Fibonacci ingestion fixtures at N=200", 60.0, criterion9},
      {10, "conjecture scans 4a and 1", 600.0, criterion10},
  };

  bool all_pass = true;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool pass = true;
    std::string error;
    try {
      criterion.body(log);
    } catch (const std::exception& e) {
      pass = false;
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (pass && elapsed >= criterion.budget_seconds) {
      pass = false;
      error = "runtime budget exceeded";
    }
    char line[64];
    std::snprintf(line, sizeof(line), " (%.2fs)", elapsed);
    std::cout << "criterion " << criterion.id << ": "
              << (pass ? "PASS" : "FAIL") << line << " - "
              << criterion.description;
    if (pass) {
      if (!log.str().empty()) std::cout << ": " << log.str();
    } else {
      std::cout << ": " << error;
    }
    std::cout << "\n";
    all_pass = all_pass && pass;
  }
  std::cout << (all_pass ? "ACCEPTANCE: all criteria pass"
                         : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return all_pass ? 0 : 1;
}
