#include "fibdig/cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdig/digitscan.hpp"
#include "fibdig/fibcore.hpp"
#include "fibdig/pisano.hpp"
#include "fibdig/randmodel.hpp"
#include "fibdig/repdigit.hpp"
#include "fibdig/report.hpp"

namespace fibdig::cli {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::uint8_t digit_from_char(char c, std::uint32_t base) {
  std::uint32_t value;
  if (c >= '0' && c <= '9') {
    value = static_cast<std::uint32_t>(c - '0');
  } else if (c >= 'a' && c <= 'z') {
    value = static_cast<std::uint32_t>(c - 'a') + 10;
  } else if (c >= 'A' && c <= 'Z') {
    value = static_cast<std::uint32_t>(c - 'A') + 10;
  } else {
    throw std::invalid_argument(std::string("invalid digit character '") + c +
                                "'");
  }
  if (value >= base) {
    throw std::invalid_argument(std::string("digit '") + c +
                                "' out of range for base " +
                                std::to_string(base));
  }
  return static_cast<std::uint8_t>(value);
}

// Accepted digit-list forms: a comma-separated list whose entries are
// decimal values or single 0-9a-z characters ("1,2,3" / "a,b"), or a
// compact run of single characters ("12358").
std::vector<std::uint8_t> parse_digit_list(const std::string& text,
                                           std::uint32_t base) {
  std::vector<std::uint8_t> out;
  if (text.empty()) {
    throw std::invalid_argument("empty digit list");
  }
  if (text.find(',') != std::string::npos) {
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (token.empty()) {
        throw std::invalid_argument("empty entry in digit list");
      }
      if (token.size() == 1) {
        out.push_back(digit_from_char(token[0], base));
      } else {
        std::size_t used = 0;
        unsigned long value = std::stoul(token, &used);
        if (used != token.size() || value >= base) {
          throw std::invalid_argument("invalid digit value '" + token +
                                      "' for base " + std::to_string(base));
        }
        out.push_back(static_cast<std::uint8_t>(value));
      }
    }
    return out;
  }
  for (char c : text) out.push_back(digit_from_char(c, base));
  return out;
}

std::string set_braces(const DigitSet& set) {
  std::string out = "{";
  bool first = true;
  for (std::uint8_t d : set.members()) {
    if (!first) out += ",";
    out += std::to_string(d);
    first = false;
  }
  out += "}";
  return out;
}

struct ScanOptions {
  std::string set_text;
  std::string omit_text;
  std::uint32_t n_digits = 0;
  std::uint32_t base = 10;
  unsigned chunks = 0;
  bool require_covered = false;
};

DigitSet make_set(const ScanOptions& opts) {
  if (!opts.set_text.empty() && !opts.omit_text.empty()) {
    throw std::invalid_argument("--set and --omit are mutually exclusive");
  }
  if (!opts.omit_text.empty()) {
    return DigitSet::complement(opts.base,
                                parse_digit_list(opts.omit_text, opts.base));
  }
  if (!opts.set_text.empty()) {
    return DigitSet(opts.base, parse_digit_list(opts.set_text, opts.base));
  }
  throw std::invalid_argument("one of --set or --omit is required");
}

void print_scan_human(std::ostream& out, const ScanConfig& config,
                      const ScanVerdict& verdict, double elapsed) {
  out << "set " << set_braces(config.set) << " in base " << config.set.base()
      << ", tails of " << config.n_digits << " digits, modulus "
      << config.modulus.value() << ", scan length " << config.scan_length
      << "\n";
  if (const auto* covered = std::get_if<Covered>(&verdict)) {
    out << "verdict: covered, every Fibonacci number contains a digit of "
           "the set";
    if (covered->exceptions.empty()) {
      out << ", no exceptions\n";
    } else {
      out << ", disregarding";
      for (const ScanException& e : covered->exceptions) {
        out << " F_" << e.index << "=" << e.value.to_decimal();
      }
      out << "\n";
    }
  } else {
    const auto& inc = std::get<Inconclusive>(verdict);
    out << "verdict: inconclusive, the last " << config.n_digits
        << " digits of F_" << inc.witness_index << " are "
        << digit_string(inc.witness_tail) << ", none in the set\n";
    out << "note: not a refutation; higher digits of the witness may contain "
           "the set, and a wider tail may still certify coverage\n";
  }
  out << "elapsed: " << elapsed << " s\n";
}

struct Table1Row {
  std::vector<std::uint8_t> omitted;
  std::uint32_t full_n;
};

// The eleven digit sets shipped as the standard run, with the tail width at
// which each is documented: {2} and {4} certify at 3 digits, {6} at 5; the
// rest stay inconclusive through 8 or 10 digits.
const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {{1}, 8},     {{2}, 3},     {{3}, 8},    {{4}, 3},
      {{5}, 8},     {{6}, 5},     {{7}, 10},   {{8}, 8},
      {{2, 4}, 10}, {{2, 6}, 10}, {{4, 6}, 10},
  };
  return rows;
}

std::string disregarded_text(const std::vector<std::pair<FibIndex, std::string>>&
                                 entries) {
  if (entries.empty()) return "-";
  std::string out;
  for (const auto& [index, value] : entries) {
    if (!out.empty()) out += ", ";
    out += "F_" + std::to_string(index) + "=" + value;
  }
  return out;
}

int run_scan(const ScanOptions& opts, const std::string& format,
             std::ostream& out, std::ostream& err) {
  DigitSet set = make_set(opts);
  ScanConfig config = ScanConfig::make(set, opts.n_digits);
  err << "scanning " << config.scan_length << " terms modulo "
      << config.modulus.value() << "\n";
  auto start = std::chrono::steady_clock::now();
  ScanVerdict verdict = scan_digit_set(config, opts.chunks);
  double elapsed = seconds_since(start);
  if (format == "json") {
    out << scan_report(config, verdict, elapsed).dump(2) << "\n";
  } else {
    print_scan_human(out, config, verdict, elapsed);
  }
  if (opts.require_covered && !std::holds_alternative<Covered>(verdict)) {
    return 1;
  }
  return 0;
}

int run_table1(std::uint32_t max_n, unsigned chunks, const std::string& format,
               std::ostream& out, std::ostream& err) {
  json rows_json = json::array();
  std::string tsv = "set\tverdict\tdisregarded\tn\n";
  for (const Table1Row& row : table1_rows()) {
    DigitSet set = DigitSet::complement(10, row.omitted);
    std::uint32_t n = std::min(row.full_n, max_n);
    if (row.full_n > max_n) {
      err << "note: row " << set_braces(set) << " capped at n=" << n
          << " (full depth " << row.full_n
          << " is long-running; rerun with --max-n " << row.full_n
          << " to reproduce it)\n";
    }
    ScanConfig config = ScanConfig::make(set, n);
    auto start = std::chrono::steady_clock::now();
    ScanVerdict verdict = scan_digit_set(config, chunks);
    double elapsed = seconds_since(start);

    // Small terms whose full digit lists avoid the set. A covered verdict
    // carries them as its exceptions; for an inconclusive verdict they are
    // enumerated directly so the row still shows what "disregarding" would
    // have to cover.
    std::vector<std::pair<FibIndex, std::string>> disregarded;
    json disregarded_json = json::array();
    if (const auto* covered = std::get_if<Covered>(&verdict)) {
      for (const ScanException& e : covered->exceptions) {
        disregarded.emplace_back(e.index, e.value.to_decimal());
      }
    } else {
      for (const SmallTerm& term : terms_below_modulus(set, n)) {
        if (term.avoids_set) {
          disregarded.emplace_back(term.index, std::to_string(term.value));
        }
      }
    }
    for (const auto& [index, value] : disregarded) {
      disregarded_json.push_back({{"index", index}, {"value", value}});
    }

    bool covered = std::holds_alternative<Covered>(verdict);
    tsv += set_braces(set) + "\t" + (covered ? "yes" : "no") + "\t" +
           disregarded_text(disregarded) + "\t" + std::to_string(n) + "\n";
    json row_json;
    row_json["omitted"] = row.omitted;
    row_json["n_digits"] = n;
    row_json["full_n"] = row.full_n;
    row_json["capped"] = row.full_n > max_n;
    row_json["disregarded"] = std::move(disregarded_json);
    row_json["scan"] = scan_report(config, verdict, elapsed);
    rows_json.push_back(std::move(row_json));
  }
  if (format == "json") {
    out << rows_json.dump(2) << "\n";
  } else {
    out << tsv;
  }
  return 0;
}

int run_repdigit(std::uint8_t digit, std::uint64_t prime, std::uint32_t power,
                 std::uint32_t base, bool search, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  std::optional<RepdigitProof> attempted;
  if (search) {
    attempted = find_repdigit_proof(digit, base);
    if (!attempted.has_value()) {
      // A failed search is a reported outcome, not a usage error.
      if (format == "json") {
        out << json{{"digit", digit},
                    {"base", base},
                    {"found", false},
                    {"max_exponent", 20}}
                   .dump(2)
            << "\n";
      } else {
        out << "No modulus p^k with p a prime factor of " << base
            << " and k up to 20 excludes the long repdigits of "
            << static_cast<int>(digit)
            << "; nothing is asserted for this digit.\n";
      }
      return 0;
    }
  }
  RepdigitProof proof = attempted.has_value()
                            ? *attempted
                            : prove_repdigit_impossible(digit, prime, power,
                                                        base);
  if (format == "json") {
    out << repdigit_report(proof).dump(2) << "\n";
  } else {
    out << repdigit_transcript(proof);
  }
  if (!proof.conclusive()) {
    err << "note: inconclusive attempts assert nothing; rerun with --search "
           "or a different --prime/--power\n";
  }
  return 0;
}

int run_freq(std::uint8_t digit, FibIndex max_index, const std::string& format,
             std::ostream& out) {
  FrequencyReport report = empirical_digit_frequency(max_index, digit);
  if (format == "json") {
    out << frequency_report(report).dump(2) << "\n";
    return 0;
  }
  out << "digit " << static_cast<int>(report.digit) << " appears in "
      << report.contain_count << " of the first " << report.max_index
      << " Fibonacci numbers (fraction " << report.contain_fraction << ")\n";
  out << "terms avoiding it, by decimal length:\n";
  for (const auto& bucket : report.per_length) {
    if (bucket.avoiding == 0) continue;
    out << "  length " << bucket.length << ": " << bucket.avoiding << " of "
        << bucket.terms << "\n";
  }
  out << "null-model expected avoidance count over the same lengths: "
      << report.heuristic_avoidance_sum << " (heuristic only)\n";
  return 0;
}

int run_model(const ModelConfig& config, unsigned workers,
              const std::string& format, std::ostream& out) {
  std::vector<AvoidanceEstimate> estimates = simulate_avoidance(config, workers);
  if (format == "json") {
    out << model_report(config, workers, estimates).dump(2) << "\n";
    return 0;
  }
  out << "digit " << static_cast<int>(config.digit) << ", " << config.trials
      << " trials per length, seed " << config.seed << ", " << workers
      << " worker(s)\n";
  for (const AvoidanceEstimate& e : estimates) {
    out << "  length " << e.length << ": observed avoidance " << e.fraction
        << ", model " << e.model_probability << "\n";
  }
  return 0;
}

int run_depth(const std::string& set_text, std::uint32_t base,
              FibIndex max_index, const std::string& format,
              std::ostream& out) {
  DigitSet set(base, parse_digit_list(set_text, base));
  DepthSurvey survey = max_depth_survey(max_index, set);
  if (format == "json") {
    out << depth_report(set, max_index, survey).dump(2) << "\n";
    return 0;
  }
  out << "deepest first-hit positions for set " << set_braces(set)
      << " over F_1..F_" << max_index << ":\n";
  for (const DepthRecord& r : survey.records) {
    out << "  F_" << r.index << " first hits at position " << r.depth
        << " from the right\n";
  }
  if (!survey.no_hit.empty()) {
    out << "terms with no digit of the set at all:";
    for (FibIndex k : survey.no_hit) out << " F_" << k;
    out << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fibonacci digit-coverage toolkit"};
  app.require_subcommand(1);

  std::string format = "human";
  auto add_format = [&](CLI::App* sub, bool tsv_ok = false) {
    std::vector<std::string> choices = {"human", "json"};
    if (tsv_ok) choices.push_back("tsv");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
  };

  // fib
  FibIndex fib_n = 0;
  CLI::App* fib_cmd = app.add_subcommand("fib", "print the exact value of F_n");
  fib_cmd->add_option("n", fib_n, "index")->required();
  add_format(fib_cmd);

  // pisano
  std::vector<std::uint64_t> pisano_moduli;
  CLI::App* pisano_cmd = app.add_subcommand(
      "pisano", "period of the Fibonacci sequence modulo each m");
  pisano_cmd->add_option("moduli", pisano_moduli, "moduli")->required();
  add_format(pisano_cmd);

  // scan
  ScanOptions scan_opts;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "check whether every Fibonacci number contains a digit of a set "
              "by scanning one period of its last-n-digit tails");
  scan_cmd->add_option("--set", scan_opts.set_text,
                       "digit set, e.g. 1,2,3,5,8 or 12358");
  scan_cmd->add_option("--omit", scan_opts.omit_text,
                       "complement form: all base digits except these");
  scan_cmd->add_option("--digits", scan_opts.n_digits, "tail width n")
      ->required();
  scan_cmd->add_option("--base", scan_opts.base, "digit base")
      ->capture_default_str();
  scan_cmd->add_option("--chunks", scan_opts.chunks,
                       "parallel chunk count (0 = one per thread)");
  scan_cmd->add_flag("--require-covered", scan_opts.require_covered,
                     "exit 1 unless the verdict is covered");
  add_format(scan_cmd);

  // table1
  std::uint32_t table_max_n = 5;
  unsigned table_chunks = 0;
  CLI::App* table_cmd = app.add_subcommand(
      "table1", "run the standard eleven digit-set rows");
  table_cmd->add_option("--max-n", table_max_n, "cap on tail width per row")
      ->capture_default_str();
  table_cmd->add_option("--chunks", table_chunks,
                        "parallel chunk count (0 = one per thread)");
  add_format(table_cmd, /*tsv_ok=*/true);

  // depth
  std::string depth_set;
  std::uint32_t depth_base = 10;
  FibIndex depth_max_index = 0;
  CLI::App* depth_cmd = app.add_subcommand(
      "depth", "first-hit digit depths over F_1..F_N");
  depth_cmd->add_option("--set", depth_set, "digit set")->required();
  depth_cmd->add_option("--base", depth_base, "digit base")
      ->capture_default_str();
  depth_cmd->add_option("--max-index", depth_max_index, "last index N")
      ->required();
  add_format(depth_cmd);

  // repdigit
  std::uint8_t rep_digit = 0;
  std::uint64_t rep_prime = 2;
  std::uint32_t rep_power = 5;
  std::uint32_t rep_base = 10;
  bool rep_search = false;
  CLI::App* rep_cmd = app.add_subcommand(
      "repdigit",
      "residue-exclusion proof that no Fibonacci number beyond the checked "
      "short cases consists of one repeated digit");
  rep_cmd->add_option("--digit", rep_digit, "repeated digit")->required();
  rep_cmd->add_option("--prime", rep_prime, "prime p dividing the base")
      ->capture_default_str();
  rep_cmd->add_option("--power", rep_power, "exponent k; modulus p^k")
      ->capture_default_str();
  rep_cmd->add_option("--base", rep_base, "digit base")->capture_default_str();
  rep_cmd->add_flag("--search", rep_search,
                    "search p^k over prime factors of the base, k ascending");
  add_format(rep_cmd);

  // freq
  std::uint8_t freq_digit = 0;
  FibIndex freq_max_index = 0;
  CLI::App* freq_cmd = app.add_subcommand(
      "freq", "how often a digit occurs in F_1..F_N, vs the null model");
  freq_cmd->add_option("--digit", freq_digit, "digit")->required();
  freq_cmd->add_option("--max-index", freq_max_index, "last index N")
      ->required();
  add_format(freq_cmd);

  // model
  ModelConfig model_config;
  std::string model_lengths;
  unsigned model_workers = 1;
  CLI::App* model_cmd = app.add_subcommand(
      "model", "Monte Carlo avoidance fractions under the random-digit model");
  model_cmd->add_option("--digit", model_config.digit, "digit")->required();
  model_cmd->add_option("--lengths", model_lengths,
                        "comma-separated string lengths")->required();
  model_cmd->add_option("--trials", model_config.trials, "trials per length")
      ->default_val(100000);
  model_cmd->add_option("--seed", model_config.seed, "random seed")
      ->default_val(1);
  model_cmd->add_option("--workers", model_workers,
                        "worker count (recorded in the report)")
      ->capture_default_str();
  add_format(model_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fibdig");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(fib_cmd)) {
      BigNat value = fib_exact(fib_n);
      if (format == "json") {
        out << json{{"n", fib_n}, {"value", value.to_decimal()}}.dump(2)
            << "\n";
      } else {
        out << value.to_decimal() << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(pisano_cmd)) {
      std::vector<PisanoResult> results = pisano_table(pisano_moduli);
      if (format == "json") {
        out << pisano_report(results).dump(2) << "\n";
      } else {
        out << pisano_csv(results);
      }
      return 0;
    }
    if (app.got_subcommand(scan_cmd)) {
      if (format == "tsv") {
        throw std::invalid_argument("tsv output is only available for table1");
      }
      return run_scan(scan_opts, format, out, err);
    }
    if (app.got_subcommand(table_cmd)) {
      return run_table1(table_max_n, table_chunks, format, out, err);
    }
    if (app.got_subcommand(depth_cmd)) {
      return run_depth(depth_set, depth_base, depth_max_index, format, out);
    }
    if (app.got_subcommand(rep_cmd)) {
      return run_repdigit(rep_digit, rep_prime, rep_power, rep_base, rep_search,
                          format, out, err);
    }
    if (app.got_subcommand(freq_cmd)) {
      return run_freq(freq_digit, freq_max_index, format, out);
    }
    if (app.got_subcommand(model_cmd)) {
      model_config.lengths.clear();
      std::stringstream stream(model_lengths);
      std::string token;
      while (std::getline(stream, token, ',')) {
        model_config.lengths.push_back(
            static_cast<std::uint32_t>(std::stoul(token)));
      }
      if (model_config.lengths.empty()) {
        throw std::invalid_argument("--lengths must name at least one length");
      }
      return run_model(model_config, model_workers, format, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace fibdig::cli
