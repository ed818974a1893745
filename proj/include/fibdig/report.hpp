#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibdig/digitscan.hpp"
#include "fibdig/pisano.hpp"
#include "fibdig/randmodel.hpp"
#include "fibdig/repdigit.hpp"

namespace fibdig {

/// Digits rendered as 0-9a-z, most significant first.
std::string digit_string(std::span<const std::uint8_t> digits_msb_first);

/// Scan report with the fixed field set: set, base, n_digits, scan_length,
/// verdict, exceptions, witness, elapsed_seconds.
nlohmann::json scan_report(const ScanConfig& config, const ScanVerdict& verdict,
                           double elapsed_seconds);

/// `modulus,period` CSV, header included, one row per modulus.
std::string pisano_csv(std::span<const PisanoResult> results);
nlohmann::json pisano_report(std::span<const PisanoResult> results);

nlohmann::json repdigit_report(const RepdigitProof& proof);
/// Human-readable transcript: modulus, excluded residue, short cases,
/// conclusion (or what failed).
std::string repdigit_transcript(const RepdigitProof& proof);

nlohmann::json frequency_report(const FrequencyReport& report);

nlohmann::json model_report(const ModelConfig& config, unsigned workers,
                            std::span<const AvoidanceEstimate> estimates);

nlohmann::json depth_report(const DigitSet& set, FibIndex max_index,
                            const DepthSurvey& survey);

}  // namespace fibdig
