#include "fibdig/digitscan.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "fibdig/pisano.hpp"

namespace fibdig {

namespace {

void check_base(std::uint32_t base) {
  if (base < 2 || base > 36) {
    throw std::invalid_argument("digit base must be in [2, 36], got " +
                                std::to_string(base));
  }
}

std::uint64_t pow_checked(std::uint32_t base, std::uint32_t exponent) {
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (m > Modulus::kMax / base) {
      throw std::invalid_argument("base^n_digits exceeds the 10^12 modulus "
                                  "ceiling");
    }
    m *= base;
  }
  return m;
}

}  // namespace

DigitSet::DigitSet(std::uint32_t base, std::span<const std::uint8_t> members)
    : base_(base), mask_(0) {
  check_base(base);
  for (std::uint8_t d : members) {
    if (d >= base) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " +
                                  std::to_string(base));
    }
    mask_ |= 1ull << d;
  }
  if (mask_ == 0) {
    throw std::invalid_argument("digit set must be non-empty");
  }
}

DigitSet DigitSet::complement(std::uint32_t base,
                              std::span<const std::uint8_t> omitted) {
  check_base(base);
  std::uint64_t mask = (1ull << base) - 1;
  for (std::uint8_t d : omitted) {
    if (d >= base) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " +
                                  std::to_string(base));
    }
    mask &= ~(1ull << d);
  }
  if (mask == 0) {
    throw std::invalid_argument("digit set must be non-empty");
  }
  return DigitSet(base, mask);
}

std::vector<std::uint8_t> DigitSet::members() const {
  std::vector<std::uint8_t> out;
  for (std::uint32_t d = 0; d < base_; ++d) {
    if (contains(d)) out.push_back(static_cast<std::uint8_t>(d));
  }
  return out;
}

std::uint64_t required_scan_bound(std::uint32_t n_digits, std::uint32_t base) {
  if (n_digits < 1) {
    throw std::invalid_argument("n_digits must be positive");
  }
  check_base(base);
  std::uint64_t modulus = pow_checked(base, n_digits);
  if (base == 10 && n_digits >= 3) {
    // Known period of the last n >= 3 decimal digits: 15 * 10^(n-1).
    std::uint64_t bound = 15;
    for (std::uint32_t i = 1; i < n_digits; ++i) bound *= 10;
    return bound;
  }
  return pisano_period(Modulus(modulus)).period;
}

ScanConfig ScanConfig::make(DigitSet set, std::uint32_t n_digits) {
  std::uint64_t length = required_scan_bound(n_digits, set.base());
  Modulus modulus(pow_checked(set.base(), n_digits));
  return ScanConfig{std::move(set), n_digits, length, modulus};
}

std::vector<SmallTerm> terms_below_modulus(const DigitSet& set,
                                           std::uint32_t n_digits) {
  const std::uint64_t modulus = pow_checked(set.base(), n_digits);
  const std::uint32_t base = set.base();
  std::vector<SmallTerm> out;
  std::uint64_t a = 1;  // F_1
  std::uint64_t b = 1;  // F_2
  for (FibIndex k = 1; a < modulus; ++k) {
    bool avoids = true;
    for (std::uint64_t t = a; t != 0; t /= base) {
      if (set.contains(static_cast<std::uint32_t>(t % base))) {
        avoids = false;
        break;
      }
    }
    out.push_back(SmallTerm{k, a, avoids});
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return out;
}

namespace {

struct ScanContext {
  std::uint64_t mask;
  std::uint32_t n_digits;
  std::uint32_t base;
  std::uint64_t modulus;
  FibIndex small_end;  // first index whose term is >= modulus
  std::vector<SmallTerm> small;
};

ScanContext make_context(const ScanConfig& config) {
  ScanContext ctx;
  ctx.mask = config.set.mask();
  ctx.n_digits = config.n_digits;
  ctx.base = config.set.base();
  ctx.modulus = config.modulus.value();
  ctx.small = terms_below_modulus(config.set, config.n_digits);
  ctx.small_end = ctx.small.empty() ? 1 : ctx.small.back().index + 1;
  return ctx;
}

void verify_period(const ScanConfig& config) {
  auto [a, b] = fib_pair_mod(config.scan_length, config.modulus);
  if (a != 0 || b != 1) {
    throw std::invalid_argument(
        "scan_length " + std::to_string(config.scan_length) +
        " is not a period of the tail sequence modulo " +
        std::to_string(config.modulus.value()));
  }
}

struct ChunkOutcome {
  FibIndex witness_index = 0;
  std::uint64_t witness_residue = 0;
  bool has_witness = false;
  std::vector<ScanException> exceptions;
};

// StaticBase == 0 means "take the base from ctx at run time"; the base-10
// instantiation lets the compiler turn the digit divisions into
// multiply-shifts on the hot path.
template <std::uint32_t StaticBase>
ChunkOutcome scan_chunk(const ScanContext& ctx, FibIndex begin, FibIndex end,
                        std::atomic<std::uint64_t>* best_witness) {
  const std::uint32_t base = StaticBase != 0 ? StaticBase : ctx.base;
  const std::uint64_t mask = ctx.mask;
  const std::uint32_t n_digits = ctx.n_digits;
  const std::uint64_t m = ctx.modulus;
  constexpr FibIndex kAbortCheckStride = 8192;

  ChunkOutcome out;
  if (begin >= end) return out;

  Modulus mod(m);
  auto [a, b] = fib_pair_mod(begin, mod);
  FibIndex next_abort_check = begin + kAbortCheckStride;
  for (FibIndex k = begin; k < end; ++k) {
    if (best_witness != nullptr && k >= next_abort_check) {
      // Indices only grow, so once a smaller witness exists elsewhere this
      // chunk cannot improve the minimum.
      if (best_witness->load(std::memory_order_relaxed) < k) return out;
      next_abort_check = k + kAbortCheckStride;
    }
    std::uint64_t t = a;
    bool hit = false;
    for (std::uint32_t i = 0; i < n_digits; ++i) {
      if ((mask >> (t % base)) & 1u) {
        hit = true;
        break;
      }
      t /= base;
    }
    if (!hit) {
      out.witness_index = k;
      out.witness_residue = a;
      out.has_witness = true;
      if (best_witness != nullptr) {
        std::uint64_t prev = best_witness->load(std::memory_order_relaxed);
        while (k < prev && !best_witness->compare_exchange_weak(
                               prev, k, std::memory_order_relaxed)) {
        }
      }
      return out;
    }
    if (k < ctx.small_end) {
      const SmallTerm& term = ctx.small[k - 1];
      if (term.avoids_set) {
        out.exceptions.push_back(ScanException{k, BigNat(term.value)});
      }
    }
    std::uint64_t next = a + b;
    if (next >= m) next -= m;
    a = b;
    b = next;
  }
  return out;
}

std::vector<std::uint8_t> tail_digits_msb(std::uint64_t residue,
                                          std::uint32_t n_digits,
                                          std::uint32_t base) {
  std::vector<std::uint8_t> out(n_digits);
  for (std::uint32_t i = 0; i < n_digits; ++i) {
    out[n_digits - 1 - i] = static_cast<std::uint8_t>(residue % base);
    residue /= base;
  }
  return out;
}

ScanVerdict merge_outcomes(const ScanContext& ctx,
                           std::vector<ChunkOutcome>& outcomes) {
  const ChunkOutcome* best = nullptr;
  for (const ChunkOutcome& outcome : outcomes) {
    if (outcome.has_witness &&
        (best == nullptr || outcome.witness_index < best->witness_index)) {
      best = &outcome;
    }
  }
  if (best != nullptr) {
    return Inconclusive{
        best->witness_index,
        tail_digits_msb(best->witness_residue, ctx.n_digits, ctx.base)};
  }
  Covered covered;
  for (ChunkOutcome& outcome : outcomes) {
    for (ScanException& e : outcome.exceptions) {
      covered.exceptions.push_back(std::move(e));
    }
  }
  return covered;
}

}  // namespace

ScanVerdict scan_digit_set_serial(const ScanConfig& config) {
  verify_period(config);
  ScanContext ctx = make_context(config);
  std::vector<ChunkOutcome> outcomes(1);
  outcomes[0] = ctx.base == 10
                    ? scan_chunk<10>(ctx, 1, config.scan_length + 1, nullptr)
                    : scan_chunk<0>(ctx, 1, config.scan_length + 1, nullptr);
  return merge_outcomes(ctx, outcomes);
}

ScanVerdict scan_digit_set(const ScanConfig& config, unsigned chunks) {
  verify_period(config);
  ScanContext ctx = make_context(config);
  if (chunks == 0) {
    chunks = static_cast<unsigned>(std::max(1, omp_get_max_threads()));
  }
  const std::uint64_t length = config.scan_length;
  const std::uint64_t chunk_count = std::min<std::uint64_t>(chunks, length);

  std::vector<ChunkOutcome> outcomes(chunk_count);
  std::atomic<std::uint64_t> best_witness{UINT64_MAX};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    FibIndex begin = 1 + length / chunk_count * c +
                     std::min<std::uint64_t>(c, length % chunk_count);
    FibIndex end = 1 + length / chunk_count * (c + 1) +
                   std::min<std::uint64_t>(c + 1, length % chunk_count);
    outcomes[c] = ctx.base == 10 ? scan_chunk<10>(ctx, begin, end, &best_witness)
                                 : scan_chunk<0>(ctx, begin, end, &best_witness);
  }
  return merge_outcomes(ctx, outcomes);
}

std::optional<std::uint32_t> rightmost_hit_depth(const BigNat& x,
                                                 const DigitSet& set) {
  if (set.base() == 10) {
    // Walk base-10^9 limbs directly; almost every probe stops within the
    // first limb.
    std::uint32_t depth = 1;
    for (std::size_t i = 0; i < x.limb_count(); ++i) {
      std::uint32_t v = x.limb(i);
      bool last = i + 1 == x.limb_count();
      for (unsigned d = 0; d < 9; ++d) {
        if (set.contains(v % 10)) return depth;
        v /= 10;
        ++depth;
        if (last && v == 0) break;
      }
    }
    if (x.is_zero() && set.contains(0)) return 1;
    return std::nullopt;
  }
  std::vector<std::uint8_t> ds = x.digits(set.base());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (set.contains(ds[i])) return static_cast<std::uint32_t>(i + 1);
  }
  return std::nullopt;
}

DepthSurvey max_depth_survey(FibIndex max_index, const DigitSet& set) {
  if (max_index < 1 || max_index > 100'000) {
    throw std::invalid_argument("max_index must be in [1, 10^5]");
  }
  DepthSurvey survey;
  std::uint32_t max_depth = 0;
  BigNat a(1);  // F_1
  BigNat b(1);  // F_2
  for (FibIndex k = 1; k <= max_index; ++k) {
    std::optional<std::uint32_t> depth = rightmost_hit_depth(a, set);
    if (!depth.has_value()) {
      survey.no_hit.push_back(k);
    } else if (*depth > max_depth) {
      max_depth = *depth;
      survey.records.push_back(DepthRecord{k, *depth});
    }
    BigNat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return survey;
}

}  // namespace fibdig
