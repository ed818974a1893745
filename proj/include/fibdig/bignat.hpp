#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibdig {

/// Arbitrary-precision non-negative integer.
///
/// Limbs hold nine decimal digits each (base 10^9, least significant limb
/// first), so extracting decimal digits costs O(digits). Canonical form: no
/// trailing zero limbs; the value zero is the empty limb vector.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  static BigNat from_decimal(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }

  friend bool operator==(const BigNat&, const BigNat&) = default;
  std::strong_ordering operator<=>(const BigNat& rhs) const;

  BigNat& operator+=(const BigNat& rhs);
  // Requires *this >= rhs; throws std::invalid_argument on underflow.
  BigNat& operator-=(const BigNat& rhs);
  friend BigNat operator+(BigNat lhs, const BigNat& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigNat operator-(BigNat lhs, const BigNat& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);

  BigNat& mul_small(std::uint32_t factor);
  BigNat& add_small(std::uint32_t addend);

  // Remainder modulo m, m >= 1; 128-bit intermediates keep the fold exact.
  std::uint64_t mod_u64(std::uint64_t m) const;

  std::size_t decimal_digit_count() const;
  std::string to_decimal() const;

  // Positional digits in the given base (2..36), least significant first.
  // Zero yields the single digit 0.
  std::vector<std::uint8_t> digits(std::uint32_t base) const;

  // Raw representation access: limb i holds nine decimal digits, least
  // significant limb first.
  std::size_t limb_count() const { return limbs_.size(); }
  std::uint32_t limb(std::size_t i) const { return limbs_[i]; }

 private:
  static constexpr std::uint64_t kLimbBase = 1'000'000'000;
  static constexpr unsigned kLimbDigits = 9;

  void trim();

  std::vector<std::uint32_t> limbs_;
};

/// Digits of x in the given base, least significant first.
std::vector<std::uint8_t> digits_of(const BigNat& x, std::uint32_t base);

}  // namespace fibdig
