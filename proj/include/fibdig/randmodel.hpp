#pragma once

#include <cstdint>
#include <vector>

#include "fibdig/fibcore.hpp"

namespace fibdig {

/// How often a digit appears somewhere in F_1..F_N, with avoidance broken
/// down by decimal length. heuristic_avoidance_sum is the sum over the same
/// terms of the null-model avoidance probability at each term's length;
/// intuition only, it proves nothing about actual digits.
struct FrequencyReport {
  std::uint8_t digit;
  FibIndex max_index;
  std::uint64_t contain_count;
  double contain_fraction;

  struct LengthBucket {
    std::uint32_t length;
    std::uint64_t terms;
    std::uint64_t avoiding;
  };
  std::vector<LengthBucket> per_length;  // sorted by length
  double heuristic_avoidance_sum;
};

/// Exact counts from the decimal digits of F_1..F_N. N in [1, 10^5].
FrequencyReport empirical_digit_frequency(FibIndex max_index,
                                          std::uint8_t digit);

/// Null model: a D-digit string with the leading digit uniform on 1..9 and
/// the rest uniform on 0..9. Probability that the string avoids `digit`:
/// (8/9) * (9/10)^(D-1) for a nonzero digit, (9/10)^(D-1) for zero.
double model_avoidance_probability(std::uint8_t digit, std::uint32_t length);

struct ModelConfig {
  std::uint8_t digit;
  std::vector<std::uint32_t> lengths;
  std::uint64_t trials;  // per length
  std::uint64_t seed;
};

struct AvoidanceEstimate {
  std::uint32_t length;
  std::uint64_t avoided;
  double fraction;
  double model_probability;

  friend bool operator==(const AvoidanceEstimate&,
                         const AvoidanceEstimate&) = default;
};

/// Monte Carlo estimate of the model avoidance probabilities. Trials are
/// split across `workers` ranges, each with a sub-stream derived from the
/// seed, the length and the worker id, so a given (config, workers) pair
/// always reproduces the same output.
std::vector<AvoidanceEstimate> simulate_avoidance(const ModelConfig& config,
                                                  unsigned workers = 1);

/// Number of decimal digits of F_n. n in [1, 10^5].
std::uint32_t fib_digit_length(FibIndex n);

}  // namespace fibdig
