#include "fibdig/report.hpp"

#include <sstream>

namespace fibdig {

using nlohmann::json;

std::string digit_string(std::span<const std::uint8_t> digits_msb_first) {
  static constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(digits_msb_first.size());
  for (std::uint8_t d : digits_msb_first) out.push_back(kAlphabet[d]);
  return out;
}

json scan_report(const ScanConfig& config, const ScanVerdict& verdict,
                 double elapsed_seconds) {
  json report;
  report["set"] = config.set.members();
  report["base"] = config.set.base();
  report["n_digits"] = config.n_digits;
  report["scan_length"] = config.scan_length;
  if (const auto* covered = std::get_if<Covered>(&verdict)) {
    report["verdict"] = "covered";
    json exceptions = json::array();
    for (const ScanException& e : covered->exceptions) {
      exceptions.push_back({{"index", e.index}, {"value", e.value.to_decimal()}});
    }
    report["exceptions"] = std::move(exceptions);
    report["witness"] = nullptr;
  } else {
    const auto& inconclusive = std::get<Inconclusive>(verdict);
    report["verdict"] = "inconclusive";
    report["exceptions"] = json::array();
    report["witness"] = {{"index", inconclusive.witness_index},
                         {"tail", digit_string(inconclusive.witness_tail)}};
  }
  report["elapsed_seconds"] = elapsed_seconds;
  return report;
}

std::string pisano_csv(std::span<const PisanoResult> results) {
  std::string out = "modulus,period\n";
  for (const PisanoResult& r : results) {
    out += std::to_string(r.modulus);
    out += ',';
    out += std::to_string(r.period);
    out += '\n';
  }
  return out;
}

json pisano_report(std::span<const PisanoResult> results) {
  json out = json::array();
  for (const PisanoResult& r : results) {
    out.push_back({{"modulus", r.modulus}, {"period", r.period}});
  }
  return out;
}

json repdigit_report(const RepdigitProof& proof) {
  json short_cases = json::array();
  for (const RepdigitShortCase& c : proof.short_cases) {
    json entry = {{"length", c.length},
                  {"value", c.value.to_decimal()},
                  {"is_fibonacci", c.fibonacci_index.has_value()}};
    if (c.fibonacci_index.has_value()) {
      entry["index"] = *c.fibonacci_index;
    } else {
      entry["index"] = nullptr;
    }
    short_cases.push_back(std::move(entry));
  }
  return json{{"digit", proof.digit},
              {"base", proof.base},
              {"prime", proof.prime},
              {"exponent", proof.exponent},
              {"modulus", proof.modulus},
              {"excluded_residue", proof.excluded_residue},
              {"long_case_excluded", proof.long_case_excluded},
              {"short_cases", std::move(short_cases)}};
}

std::string repdigit_transcript(const RepdigitProof& proof) {
  std::ostringstream out;
  int d = proof.digit;
  out << "Repdigits of " << d << " in base " << proof.base << ", modulus "
      << proof.prime << "^" << proof.exponent << " = " << proof.modulus
      << ".\n";
  out << "Every repdigit of " << d << " with at least " << proof.exponent
      << " digits is congruent to " << proof.excluded_residue << " mod "
      << proof.modulus << ".\n";
  if (proof.long_case_excluded) {
    out << "Scanning one full period shows the Fibonacci sequence mod "
        << proof.modulus << " never attains " << proof.excluded_residue
        << ", so no Fibonacci number has " << proof.exponent
        << " or more digits all equal to " << d << ".\n";
  } else {
    out << "The Fibonacci sequence mod " << proof.modulus << " does attain "
        << proof.excluded_residue
        << ", so this modulus excludes nothing; try a larger exponent.\n";
  }
  if (proof.short_cases.empty()) {
    out << "No shorter repdigits to check.\n";
  } else {
    out << "Shorter repdigits checked directly:\n";
    for (const RepdigitShortCase& c : proof.short_cases) {
      out << "  " << c.value.to_decimal();
      if (c.fibonacci_index.has_value()) {
        out << " is the Fibonacci number of index " << *c.fibonacci_index
            << "\n";
      } else {
        out << " is not a Fibonacci number\n";
      }
    }
  }
  if (proof.long_case_excluded) {
    std::vector<std::string> hits;
    for (const RepdigitShortCase& c : proof.short_cases) {
      if (c.fibonacci_index.has_value()) hits.push_back(c.value.to_decimal());
    }
    if (hits.empty()) {
      out << "Conclusion: no Fibonacci number is written using only the digit "
          << d << ".\n";
    } else {
      out << "Conclusion: the complete list of Fibonacci repdigits of " << d
          << " is:";
      for (const std::string& h : hits) out << " " << h;
      out << ".\n";
    }
  } else {
    out << "Conclusion: inconclusive for this modulus.\n";
  }
  return out.str();
}

json frequency_report(const FrequencyReport& report) {
  json per_length = json::array();
  for (const auto& bucket : report.per_length) {
    per_length.push_back({{"length", bucket.length},
                          {"terms", bucket.terms},
                          {"avoiding", bucket.avoiding}});
  }
  return json{{"digit", report.digit},
              {"max_index", report.max_index},
              {"contain_count", report.contain_count},
              {"contain_fraction", report.contain_fraction},
              {"per_length", std::move(per_length)},
              {"heuristic_avoidance_sum", report.heuristic_avoidance_sum}};
}

json model_report(const ModelConfig& config, unsigned workers,
                  std::span<const AvoidanceEstimate> estimates) {
  json results = json::array();
  for (const AvoidanceEstimate& e : estimates) {
    results.push_back({{"length", e.length},
                       {"avoided", e.avoided},
                       {"fraction", e.fraction},
                       {"model_probability", e.model_probability}});
  }
  return json{{"digit", config.digit},
              {"lengths", config.lengths},
              {"trials", config.trials},
              {"seed", config.seed},
              {"workers", workers},
              {"results", std::move(results)}};
}

json depth_report(const DigitSet& set, FibIndex max_index,
                  const DepthSurvey& survey) {
  json records = json::array();
  for (const DepthRecord& r : survey.records) {
    records.push_back({{"index", r.index}, {"depth", r.depth}});
  }
  return json{{"set", set.members()},
              {"base", set.base()},
              {"max_index", max_index},
              {"records", std::move(records)},
              {"no_hit_indices", survey.no_hit}};
}

}  // namespace fibdig
