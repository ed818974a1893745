#include "fibdig/randmodel.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace fibdig {

namespace {

constexpr FibIndex kMaxIndex = 100'000;

void check_index(FibIndex n) {
  if (n < 1 || n > kMaxIndex) {
    throw std::invalid_argument("index must be in [1, 10^5], got " +
                                std::to_string(n));
  }
}

void check_digit(std::uint8_t digit) {
  if (digit > 9) {
    throw std::invalid_argument("digit must be in [0, 9]");
  }
}

// splitmix64; the standard 64-bit mixer. Used both to derive per-worker
// stream seeds and as the simulation generator itself, so results do not
// depend on any library's distribution internals.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return mix64(state_++); }

 private:
  std::uint64_t state_;
};

bool contains_digit_u64_chunks(const BigNat& value, std::uint8_t digit) {
  // Limbs hold nine decimal digits each; stop at the first match.
  for (std::size_t i = 0; i < value.limb_count(); ++i) {
    std::uint32_t v = value.limb(i);
    bool last = i + 1 == value.limb_count();
    for (unsigned d = 0; d < 9; ++d) {
      if (v % 10 == digit) return true;
      v /= 10;
      if (last && v == 0) break;
    }
  }
  return false;
}

}  // namespace

double model_avoidance_probability(std::uint8_t digit, std::uint32_t length) {
  check_digit(digit);
  if (length == 0) {
    throw std::invalid_argument("length must be positive");
  }
  double tail = std::pow(0.9, static_cast<double>(length - 1));
  return digit == 0 ? tail : (8.0 / 9.0) * tail;
}

FrequencyReport empirical_digit_frequency(FibIndex max_index,
                                          std::uint8_t digit) {
  check_index(max_index);
  check_digit(digit);

  FrequencyReport report;
  report.digit = digit;
  report.max_index = max_index;
  report.contain_count = 0;
  report.heuristic_avoidance_sum = 0.0;

  std::map<std::uint32_t, FrequencyReport::LengthBucket> buckets;
  BigNat a(1);  // F_1
  BigNat b(1);  // F_2
  for (FibIndex k = 1; k <= max_index; ++k) {
    auto length = static_cast<std::uint32_t>(a.decimal_digit_count());
    auto& bucket = buckets[length];
    bucket.length = length;
    ++bucket.terms;
    if (contains_digit_u64_chunks(a, digit)) {
      ++report.contain_count;
    } else {
      ++bucket.avoiding;
    }
    report.heuristic_avoidance_sum += model_avoidance_probability(digit, length);
    BigNat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  report.contain_fraction = static_cast<double>(report.contain_count) /
                            static_cast<double>(max_index);
  report.per_length.reserve(buckets.size());
  for (auto& [_, bucket] : buckets) report.per_length.push_back(bucket);
  return report;
}

std::vector<AvoidanceEstimate> simulate_avoidance(const ModelConfig& config,
                                                  unsigned workers) {
  check_digit(config.digit);
  if (config.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("workers must be at least 1");
  }
  for (std::uint32_t length : config.lengths) {
    if (length == 0) {
      throw std::invalid_argument("lengths must be positive");
    }
  }

  std::vector<AvoidanceEstimate> out;
  out.reserve(config.lengths.size());
  for (std::size_t li = 0; li < config.lengths.size(); ++li) {
    const std::uint32_t length = config.lengths[li];
    const std::uint8_t digit = config.digit;
    std::uint64_t avoided_total = 0;

#pragma omp parallel for reduction(+ : avoided_total) schedule(static)
    for (unsigned w = 0; w < workers; ++w) {
      // Fixed derivation rule: seed, then length position, then worker id.
      StreamRng rng(mix64(config.seed ^ mix64(li + 1)) + w);
      std::uint64_t begin =
          config.trials / workers * w + std::min<std::uint64_t>(w, config.trials % workers);
      std::uint64_t end = config.trials / workers * (w + 1) +
                          std::min<std::uint64_t>(w + 1, config.trials % workers);
      std::uint64_t avoided = 0;
      for (std::uint64_t t = begin; t < end; ++t) {
        std::uint8_t lead = static_cast<std::uint8_t>(1 + rng.next() % 9);
        bool avoids = lead != digit;
        for (std::uint32_t i = 1; avoids && i < length; ++i) {
          avoids = static_cast<std::uint8_t>(rng.next() % 10) != digit;
        }
        if (avoids) ++avoided;
      }
      avoided_total += avoided;
    }

    AvoidanceEstimate estimate;
    estimate.length = length;
    estimate.avoided = avoided_total;
    estimate.fraction = static_cast<double>(avoided_total) /
                        static_cast<double>(config.trials);
    estimate.model_probability = model_avoidance_probability(digit, length);
    out.push_back(estimate);
  }
  return out;
}

std::uint32_t fib_digit_length(FibIndex n) {
  check_index(n);
  return static_cast<std::uint32_t>(fib_exact(n).decimal_digit_count());
}

}  // namespace fibdig
