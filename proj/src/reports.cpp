#include "dold/reports.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dold {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected plain, csv, or json)");
}

std::string format_factorization(
    std::span<const std::pair<uint64_t, unsigned>> factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

json row_to_json(const RepairTableRow& row) {
  json factors = json::array();
  for (const auto& [p, e] : row.factorization) {
    factors.push_back({{"prime", p}, {"exponent", e}});
  }
  return json{{"k", row.k},
              {"failure", row.failure.get_str()},
              {"factorization", factors},
              {"ratio", row.ratio.str()}};
}

std::string csv_line(uint64_t k, const std::string& value,
                     const std::string& factorization,
                     const std::string& ratio) {
  return std::to_string(k) + "," + value + "," + factorization + "," + ratio;
}

}  // namespace

std::string table_to_csv(std::span<const RepairTableRow> rows) {
  std::string out;
  for (const RepairTableRow& row : rows) {
    out += csv_line(row.k, row.failure.get_str(),
                    format_factorization(row.factorization),
                    row.ratio.str());
    out += "\n";
  }
  return out;
}

std::string table_to_jsonl(std::span<const RepairTableRow> rows) {
  std::string out;
  for (const RepairTableRow& row : rows) {
    out += row_to_json(row).dump();
    out += "\n";
  }
  return out;
}

std::string table_to_plain(std::span<const RepairTableRow> rows) {
  std::ostringstream out;
  out << "k\tfailure'\tfactorization\tratio\n";
  for (const RepairTableRow& row : rows) {
    out << row.k << "\t" << row.failure.get_str() << "\t"
        << format_factorization(row.factorization) << "\t" << row.ratio.str()
        << "\n";
  }
  return out.str();
}

std::string json_table_to_csv(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json row = json::parse(line);
    std::vector<std::pair<uint64_t, unsigned>> factors;
    for (const json& f : row.at("factorization")) {
      factors.emplace_back(f.at("prime").get<uint64_t>(),
                           f.at("exponent").get<unsigned>());
    }
    out += csv_line(row.at("k").get<uint64_t>(),
                    row.at("failure").get<std::string>(),
                    format_factorization(factors),
                    row.at("ratio").get<std::string>());
    out += "\n";
  }
  return out;
}

std::string sequence_to_plain(const IntegerSequencePrefix& prefix) {
  std::string out;
  for (const Integer& v : prefix.values()) {
    if (!out.empty()) out += " ";
    out += v.get_str();
  }
  out += "\n";
  return out;
}

std::string sequence_to_csv(const IntegerSequencePrefix& prefix) {
  std::string out;
  for (uint64_t n = 1; n <= prefix.size(); ++n) {
    out += std::to_string(n) + "," + prefix.at(n).get_str() + "\n";
  }
  return out;
}

std::string sequence_to_json(const IntegerSequencePrefix& prefix) {
  json values = json::array();
  for (const Integer& v : prefix.values()) values.push_back(v.get_str());
  json out{{"label", prefix.label()},
           {"id", prefix.id().token()},
           {"n", prefix.size()},
           {"values", values}};
  return out.dump() + "\n";
}

std::string dold_report_to_plain(const DoldReport& report,
                                 const IntegerSequencePrefix& prefix) {
  std::ostringstream out;
  out << "sequence: " << prefix.label() << "\n";
  out << "horizon: " << report.horizon << "\n";
  if (report.realizable_up_to_horizon()) {
    out << "verdict: realizable up to " << report.horizon << "\n";
  } else {
    if (report.first_dold_violation) {
      uint64_t n = *report.first_dold_violation;
      out << "verdict: Dold violation at n=" << n << " (denominator "
          << report.denominators[n - 1].get_str() << ")\n";
    }
    if (report.first_sign_violation) {
      out << (report.first_dold_violation ? "also: " : "verdict: ")
          << "sign violation at n=" << *report.first_sign_violation << "\n";
    }
  }
  return out.str();
}

std::string dold_report_to_json(const DoldReport& report,
                                const IntegerSequencePrefix& prefix) {
  json nontrivial = json::array();
  for (uint64_t n = 1; n <= report.horizon; ++n) {
    if (report.denominators[n - 1] != 1) {
      nontrivial.push_back(
          {{"n", n}, {"denominator", report.denominators[n - 1].get_str()}});
    }
  }
  json out{{"label", prefix.label()},
           {"id", prefix.id().token()},
           {"horizon", report.horizon},
           {"realizable_up_to_horizon", report.realizable_up_to_horizon()},
           {"nontrivial_denominators", nontrivial}};
  if (report.first_dold_violation) {
    out["first_dold_violation"] = *report.first_dold_violation;
  }
  if (report.first_sign_violation) {
    out["first_sign_violation"] = *report.first_sign_violation;
  }
  return out.dump() + "\n";
}

namespace {

std::string failure_headline(const FailureResult& result) {
  std::string value = result.value.get_str();
  std::string factors = format_factorization(factorize(result.value));
  if (factors == value) return value;
  return value + " = " + factors;
}

}  // namespace

std::string failure_to_plain(const FailureContext& ctx) {
  const FailureResult& result = *ctx.result;
  std::ostringstream out;
  out << "sequence: " << ctx.prefix->label() << "\n";
  out << "truncated failure (N=" << result.horizon
      << "): " << failure_headline(result) << "\n";
  if (!result.witnesses.empty()) {
    out << "witnesses:";
    bool first = true;
    for (const PrimePowerWitness& w : result.witnesses) {
      out << (first ? " " : "; ");
      first = false;
      out << w.prime;
      if (w.exponent != 1) out << "^" << w.exponent;
      out << " at n=" << w.index;
    }
    out << "\n";
  }
  out << "sign condition: " << (result.sign_ok ? "ok" : "violated") << "\n";
  if (ctx.second_kind_bound_checked) {
    out << "divides (k-1)!: " << (ctx.second_kind_bound_holds ? "yes" : "NO")
        << "\n";
  }
  if (!ctx.first_kind_witnesses.empty()) {
    out << "witness primes: ";
    bool first = true;
    for (const WitnessCertificate& cert : ctx.first_kind_witnesses) {
      if (!first) out << ", ";
      first = false;
      out << cert.p;
    }
    out << "\n";
  }
  if (ctx.verify_horizon) {
    if (ctx.verify_violation) {
      out << "repaired-sequence check up to " << *ctx.verify_horizon
          << ": FAILED at n=" << *ctx.verify_violation << "\n";
    } else {
      out << "repaired-sequence check up to " << *ctx.verify_horizon
          << ": ok\n";
    }
  }
  return out.str();
}

std::string failure_to_json(const FailureContext& ctx) {
  const FailureResult& result = *ctx.result;
  json witnesses = json::array();
  for (const PrimePowerWitness& w : result.witnesses) {
    witnesses.push_back(
        {{"prime", w.prime}, {"exponent", w.exponent}, {"n", w.index}});
  }
  json out{{"label", ctx.prefix->label()},
           {"id", ctx.prefix->id().token()},
           {"horizon", result.horizon},
           {"failure", result.value.get_str()},
           {"factorization", format_factorization(factorize(result.value))},
           {"witnesses", witnesses},
           {"sign_ok", result.sign_ok}};
  if (ctx.second_kind_bound_checked) {
    out["divides_offset_factorial"] = ctx.second_kind_bound_holds;
  }
  if (!ctx.first_kind_witnesses.empty()) {
    json certs = json::array();
    for (const WitnessCertificate& cert : ctx.first_kind_witnesses) {
      certs.push_back({{"p", cert.p},
                       {"residue", cert.residue},
                       {"orbit_valuation", cert.orbit_valuation}});
    }
    out["witness_primes"] = certs;
  }
  if (ctx.verify_horizon) {
    out["verify_horizon"] = *ctx.verify_horizon;
    out["verify_ok"] = !ctx.verify_violation.has_value();
    if (ctx.verify_violation) out["verify_violation"] = *ctx.verify_violation;
  }
  return out.dump() + "\n";
}

std::string lemma_sweeps_to_plain(int which,
                                  std::span<const LemmaSweepResult> sweeps) {
  std::ostringstream out;
  uint64_t total = 0;
  uint64_t failures = 0;
  for (const LemmaSweepResult& s : sweeps) {
    out << "lemma " << which << " p=" << s.p << " k=1.." << s.k_max << ": "
        << (s.failures == 0 ? "all pass" : "FAILURES") << " (" << s.cases
        << " cases";
    if (s.failures != 0) {
      out << ", " << s.failures << " failures, first at k="
          << *s.first_failure_k;
    }
    out << ")\n";
    total += s.cases;
    failures += s.failures;
  }
  out << "total: " << total << " cases, " << failures << " failures\n";
  return out.str();
}

std::string lemma_sweeps_to_jsonl(int which,
                                  std::span<const LemmaSweepResult> sweeps) {
  std::string out;
  for (const LemmaSweepResult& s : sweeps) {
    json line{{"lemma", which},
              {"p", s.p},
              {"k_max", s.k_max},
              {"cases", s.cases},
              {"failures", s.failures}};
    if (s.first_failure_k) line["first_failure_k"] = *s.first_failure_k;
    out += line.dump();
    out += "\n";
  }
  return out;
}

namespace {

const char* status_name(CaseStatus status) {
  switch (status) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::vacuous:
      return "vacuous";
    case CaseStatus::evidence:
      return "evidence";
  }
  return "?";
}

}  // namespace

std::string conjecture_to_plain(const ConjectureReport& report) {
  std::ostringstream out;
  out << "conjecture " << report.conjecture << " (" << report.range
      << "), truncated at N=" << report.horizon << "\n";
  for (const ConjectureCase& c : report.cases) {
    out << "  " << c.label << ": " << status_name(c.status);
    if (!c.detail.empty()) out << " - " << c.detail;
    out << "\n";
  }
  bool verdict_applies = false;
  for (const ConjectureCase& c : report.cases) {
    if (c.status == CaseStatus::pass || c.status == CaseStatus::fail) {
      verdict_applies = true;
    }
  }
  if (verdict_applies) {
    out << (report.all_pass() ? "all cases pass" : "COUNTEREXAMPLES FOUND")
        << " (on truncated values at N=" << report.horizon << ")\n";
  } else {
    out << "evidence only; no verdict\n";
  }
  return out.str();
}

std::string conjecture_to_jsonl(const ConjectureReport& report) {
  std::string out;
  for (const ConjectureCase& c : report.cases) {
    json line{{"conjecture", report.conjecture},
              {"horizon", report.horizon},
              {"case", c.label},
              {"status", status_name(c.status)},
              {"detail", c.detail}};
    out += line.dump();
    out += "\n";
  }
  return out;
}

}  // namespace dold
