// dold: decide, certify and measure realizability of integer sequences,
// with generators for the offset Stirling families of both kinds.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dold/cache.hpp"
#include "dold/config.hpp"
#include "dold/congruence.hpp"
#include "dold/conjectures.hpp"
#include "dold/errors.hpp"
#include "dold/realizability.hpp"
#include "dold/reports.hpp"
#include "dold/sequence.hpp"
#include "dold/stirling.hpp"

namespace {

using namespace dold;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;        // usage or ingestion errors
constexpr int kExitInternal = 2;     // internal consistency violation

StirlingKind parse_kind(const std::string& name) {
  if (name == "first" || name == "first-unsigned") {
    return StirlingKind::first_unsigned;
  }
  if (name == "first-signed") return StirlingKind::first_signed;
  if (name == "second") return StirlingKind::second;
  throw CLI::ValidationError(
      "--kind", "expected first, first-signed, or second (got '" + name + "')");
}

struct CommonOptions {
  std::string config_path;
  std::string cache_dir_flag;
  std::string format_name;
};

RunConfig resolve_config(const CommonOptions& common) {
  RunConfig config;
  if (!common.config_path.empty()) {
    config = load_config_file(common.config_path, config);
  }
  apply_env_overrides(config);
  if (!common.cache_dir_flag.empty()) config.cache_dir = common.cache_dir_flag;
  if (!common.format_name.empty()) {
    config.format = parse_format(common.format_name);
  }
  config.validate();
  return config;
}

PrefixProvider make_provider(const RunConfig& config) {
  if (config.cache_dir.empty()) return PrefixProvider();
  return PrefixProvider(SequenceCache(config.cache_dir));
}

// Source selection shared by check/failure: a named family or a b-file.
struct SourceOptions {
  std::string kind_name;
  uint64_t k = 0;
  std::string file;
};

IntegerSequencePrefix load_source(const SourceOptions& source,
                                  PrefixProvider& provider, uint64_t horizon) {
  if (!source.file.empty()) {
    IntegerSequencePrefix prefix = ingest_bfile(source.file);
    if (horizon < prefix.size()) return prefix.truncated(horizon);
    return prefix;
  }
  if (source.kind_name.empty() || source.k == 0) {
    throw CLI::ValidationError("source",
                               "need either --file or --kind with --k");
  }
  return provider.get(parse_kind(source.kind_name), source.k, horizon);
}

int cmd_seq(const CommonOptions& common, const SourceOptions& source,
            uint64_t n) {
  RunConfig config = resolve_config(common);
  PrefixProvider provider = make_provider(config);
  if (source.kind_name.empty() || source.k == 0) {
    throw CLI::ValidationError("seq", "--kind and --k are required");
  }
  const IntegerSequencePrefix& prefix =
      provider.get(parse_kind(source.kind_name), source.k, n);
  switch (config.format) {
    case OutputFormat::plain:
      std::cout << sequence_to_plain(prefix);
      break;
    case OutputFormat::csv:
      std::cout << sequence_to_csv(prefix);
      break;
    case OutputFormat::json:
      std::cout << sequence_to_json(prefix);
      break;
  }
  return kExitOk;
}

int cmd_check(const CommonOptions& common, const SourceOptions& source,
              std::optional<uint64_t> horizon_flag) {
  RunConfig config = resolve_config(common);
  if (horizon_flag) config.horizon = *horizon_flag;
  config.validate();
  PrefixProvider provider = make_provider(config);
  IntegerSequencePrefix prefix = load_source(source, provider, config.horizon);
  DoldReport report = dold_check(prefix);
  if (config.format == OutputFormat::json) {
    std::cout << dold_report_to_json(report, prefix);
  } else {
    std::cout << dold_report_to_plain(report, prefix);
  }
  return kExitOk;
}

int cmd_failure(const CommonOptions& common, const SourceOptions& source,
                std::optional<uint64_t> horizon_flag,
                std::optional<uint64_t> verify_horizon) {
  RunConfig config = resolve_config(common);
  if (horizon_flag) config.horizon = *horizon_flag;
  if (verify_horizon) config.verify_horizon = *verify_horizon;
  config.validate();
  PrefixProvider provider = make_provider(config);
  IntegerSequencePrefix prefix = load_source(source, provider, config.horizon);
  FailureResult result = failure_truncated(prefix);

  FailureContext ctx;
  ctx.prefix = &prefix;
  ctx.result = &result;
  if (prefix.id().family == SequenceFamily::second) {
    Integer bound = factorial(prefix.id().k - 1);
    ctx.second_kind_bound_checked = true;
    ctx.second_kind_bound_holds =
        mpz_divisible_p(bound.get_mpz_t(), result.value.get_mpz_t()) != 0;
  }
  if (prefix.id().family == SequenceFamily::first_unsigned ||
      prefix.id().family == SequenceFamily::first_signed) {
    // Infinite-witness evidence: a handful of certified primes is enough for
    // the report; the full list is available through the library.
    uint64_t bound = std::min<uint64_t>(config.prime_bound, 200);
    auto certs = witness_prime_first_kind(prefix.id().k, bound);
    if (certs.size() > 8) certs.resize(8);
    ctx.first_kind_witnesses = std::move(certs);
  }
  if (verify_horizon) {
    if (prefix.id().family != SequenceFamily::second) {
      throw CLI::ValidationError(
          "--verify-horizon",
          "extended verification needs a second-kind family source");
    }
    ctx.verify_horizon = config.verify_horizon;
    ctx.verify_violation = verify_scaled_second_kind_dold(
        prefix.id().k, result.value, config.verify_horizon);
  }

  if (config.format == OutputFormat::json) {
    std::cout << failure_to_json(ctx);
  } else {
    std::cout << failure_to_plain(ctx);
  }
  return kExitOk;
}

int cmd_table(const CommonOptions& common, std::optional<uint64_t> k_max_flag,
              std::optional<uint64_t> horizon_flag, bool extended) {
  RunConfig config = resolve_config(common);
  if (k_max_flag) config.k_max = *k_max_flag;
  if (horizon_flag) config.horizon = *horizon_flag;
  config.validate();
  if (config.k_max > 14 && !extended) {
    throw CLI::ValidationError(
        "--k-max", "rows above k=14 take much longer; pass --extended");
  }
  PrefixProvider provider = make_provider(config);
  SecondKindScanContext ctx(provider);
  auto rows = repair_table(ctx, config.k_max, config.horizon);
  switch (config.format) {
    case OutputFormat::plain:
      std::cout << table_to_plain(rows);
      break;
    case OutputFormat::csv:
      std::cout << table_to_csv(rows);
      break;
    case OutputFormat::json:
      std::cout << table_to_jsonl(rows);
      break;
  }
  return kExitOk;
}

int cmd_lemma(const CommonOptions& common, int which, uint64_t p_max) {
  RunConfig config = resolve_config(common);
  if (p_max > config.prime_bound) {
    throw CLI::ValidationError("--p-max", "p-max exceeds the prime bound");
  }
  PrimeSieve sieve(std::max<uint64_t>(p_max, 2));
  std::vector<LemmaSweepResult> sweeps;
  for (uint64_t p : sieve.primes_up_to(p_max)) {
    sweeps.push_back(which == 3 ? lemma3_sweep(p, p * p)
                                : lemma4_sweep(p, p * p));
  }
  if (config.format == OutputFormat::json) {
    std::cout << lemma_sweeps_to_jsonl(which, sweeps);
  } else {
    std::cout << lemma_sweeps_to_plain(which, sweeps);
  }
  for (const LemmaSweepResult& s : sweeps) {
    if (s.failures != 0) return kExitInternal;
  }
  return kExitOk;
}

int cmd_conjecture(const CommonOptions& common, const std::string& id,
                   std::optional<uint64_t> k_max_flag, uint64_t p_max,
                   uint64_t j_max, std::optional<uint64_t> horizon_flag) {
  RunConfig config = resolve_config(common);
  if (k_max_flag) config.k_max = *k_max_flag;
  if (horizon_flag) config.horizon = *horizon_flag;
  config.validate();
  if (config.k_max > 14) {
    throw CLI::ValidationError("--k-max",
                               "scans above k=14 need the table's --extended "
                               "runtime; rerun with a smaller range");
  }
  PrefixProvider provider = make_provider(config);
  SecondKindScanContext ctx(provider);
  ConjectureReport report;
  if (id == "1") {
    report = scan_conjecture1(ctx, config.k_max, config.horizon);
  } else if (id == "2") {
    report = scan_conjecture2(ctx, config.k_max, config.horizon);
  } else if (id == "3") {
    report = scan_conjecture3(ctx, config.k_max, config.horizon);
  } else if (id.size() == 2 && id[0] == '4' && id[1] >= 'a' && id[1] <= 'd') {
    report = scan_conjecture4(ctx, id[1], p_max, j_max, config.k_max,
                              config.horizon);
  } else {
    throw CLI::ValidationError("--id",
                               "expected one of 1, 2, 3, 4a, 4b, 4c, 4d");
  }
  if (config.format == OutputFormat::json) {
    std::cout << conjecture_to_jsonl(report);
  } else {
    std::cout << conjecture_to_plain(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realizability and repair factors of integer sequences"};
  app.require_subcommand(1);
  // global options (--format, --cache-dir, --config) may follow the
  // subcommand name
  app.fallthrough();

  CommonOptions common;
  app.add_option("--config", common.config_path, "JSON config file");
  app.add_option("--cache-dir", common.cache_dir_flag,
                 "sequence cache directory (or env DOLD_CACHE_DIR)");
  app.add_option("--format", common.format_name, "plain, csv, or json");

  SourceOptions source;
  uint64_t seq_n = 10;
  auto* seq = app.add_subcommand("seq", "print a Stirling sequence prefix");
  seq->add_option("--kind", source.kind_name,
                  "first, first-signed, or second");
  seq->add_option("--k", source.k, "offset parameter k >= 1");
  seq->add_option("--n", seq_n, "prefix length")->check(CLI::PositiveNumber);

  std::optional<uint64_t> horizon_flag;
  auto* check = app.add_subcommand("check", "Dold and sign condition report");
  check->add_option("--kind", source.kind_name,
                    "first, first-signed, or second");
  check->add_option("--k", source.k, "offset parameter k >= 1");
  check->add_option("--file", source.file, "b-file to ingest instead");
  check->add_option("--n", horizon_flag, "horizon (default from config)");

  std::optional<uint64_t> verify_flag;
  auto* failure = app.add_subcommand(
      "failure", "truncated failure (lcm of orbit denominators)");
  failure->add_option("--kind", source.kind_name,
                      "first, first-signed, or second");
  failure->add_option("--k", source.k, "offset parameter k >= 1");
  failure->add_option("--file", source.file, "b-file to ingest instead");
  failure->add_option("--n", horizon_flag, "horizon (default from config)");
  failure->add_option("--verify-horizon", verify_flag,
                      "re-check the repaired sequence up to this horizon");

  std::optional<uint64_t> k_max_flag;
  bool extended = false;
  auto* table = app.add_subcommand("table", "repair-factor table");
  table->add_option("--k-max", k_max_flag, "largest k (default 14)");
  table->add_option("--n", horizon_flag, "horizon (default 3000)");
  table->add_flag("--extended", extended, "allow k-max above 14");

  int lemma_which = 3;
  uint64_t p_max = 7;
  auto* lemma = app.add_subcommand("lemma", "residue sweeps, k up to p^2");
  lemma->add_option("--which", lemma_which, "3 or 4")
      ->check(CLI::IsMember({3, 4}));
  lemma->add_option("--p-max", p_max, "largest prime");

  std::string conjecture_id;
  uint64_t j_max = 3;
  auto* conjecture =
      app.add_subcommand("conjecture", "scan a repair-factor conjecture");
  conjecture->add_option("--id", conjecture_id, "1, 2, 3, 4a, 4b, 4c, 4d")
      ->required();
  conjecture->add_option("--k-max", k_max_flag, "largest k (default 14)");
  conjecture->add_option("--p-max", p_max, "largest prime (conjecture 4)");
  conjecture->add_option("--j-max", j_max, "largest exponent (conjecture 4)");
  conjecture->add_option("--n", horizon_flag, "horizon (default 3000)");

  try {
    app.parse(argc, argv);
    if (seq->parsed()) return cmd_seq(common, source, seq_n);
    if (check->parsed()) return cmd_check(common, source, horizon_flag);
    if (failure->parsed()) {
      return cmd_failure(common, source, horizon_flag, verify_flag);
    }
    if (table->parsed()) {
      return cmd_table(common, k_max_flag, horizon_flag, extended);
    }
    if (lemma->parsed()) return cmd_lemma(common, lemma_which, p_max);
    if (conjecture->parsed()) {
      return cmd_conjecture(common, conjecture_id, k_max_flag, p_max, j_max,
                            horizon_flag);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const dold::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const dold::IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
