#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dold/congruence.hpp"
#include "dold/conjectures.hpp"
#include "dold/realizability.hpp"
#include "dold/sequence.hpp"

namespace dold {

enum class OutputFormat { plain, csv, json };

OutputFormat parse_format(const std::string& name);  // throws invalid_argument

// "2^2·3·5" with primes ascending and unit exponents omitted; "1" for the
// empty factorization.
std::string format_factorization(
    std::span<const std::pair<uint64_t, unsigned>> factors);

// Machine table output: CSV rows "k,value,factorization,ratio" (no header)
// and JSON-lines. json_table_to_csv re-derives the CSV from the JSON lines,
// byte-identically.
std::string table_to_csv(std::span<const RepairTableRow> rows);
std::string table_to_jsonl(std::span<const RepairTableRow> rows);
std::string table_to_plain(std::span<const RepairTableRow> rows);
std::string json_table_to_csv(const std::string& jsonl);

std::string sequence_to_plain(const IntegerSequencePrefix& prefix);
std::string sequence_to_csv(const IntegerSequencePrefix& prefix);
std::string sequence_to_json(const IntegerSequencePrefix& prefix);

std::string dold_report_to_plain(const DoldReport& report,
                                 const IntegerSequencePrefix& prefix);
std::string dold_report_to_json(const DoldReport& report,
                                const IntegerSequencePrefix& prefix);

// Optional certificate lines for recognized families (second kind: the
// (k-1)! divisor bound; first kind: witness primes).
struct FailureContext {
  const IntegerSequencePrefix* prefix = nullptr;
  const FailureResult* result = nullptr;
  std::vector<WitnessCertificate> first_kind_witnesses;
  bool second_kind_bound_checked = false;
  bool second_kind_bound_holds = false;
  std::optional<uint64_t> verify_horizon;        // extended re-check, if run
  std::optional<uint64_t> verify_violation;
};

std::string failure_to_plain(const FailureContext& ctx);
std::string failure_to_json(const FailureContext& ctx);

std::string lemma_sweeps_to_plain(int which,
                                  std::span<const LemmaSweepResult> sweeps);
std::string lemma_sweeps_to_jsonl(int which,
                                  std::span<const LemmaSweepResult> sweeps);

std::string conjecture_to_plain(const ConjectureReport& report);
std::string conjecture_to_jsonl(const ConjectureReport& report);

}  // namespace dold
