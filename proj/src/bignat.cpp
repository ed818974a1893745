#include "fibdig/bignat.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace fibdig {

namespace {

constexpr std::uint64_t kLimbBase = 1'000'000'000;
constexpr unsigned kLimbDigits = 9;

void check_base(std::uint32_t base) {
  if (base < 2 || base > 36) {
    throw std::invalid_argument("digit base must be in [2, 36], got " +
                                std::to_string(base));
  }
}

}  // namespace

BigNat::BigNat(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kLimbBase));
    value /= kLimbBase;
  }
}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal string");
  }
  BigNat out;
  std::size_t len = text.size();
  std::size_t first = len % kLimbDigits;
  std::size_t pos = 0;
  auto parse_group = [&](std::size_t count) {
    std::uint32_t limb = 0;
    for (std::size_t i = 0; i < count; ++i, ++pos) {
      char c = text[pos];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("invalid decimal digit in input");
      }
      limb = limb * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return limb;
  };
  std::vector<std::uint32_t> big_endian;
  if (first != 0) big_endian.push_back(parse_group(first));
  while (pos < len) big_endian.push_back(parse_group(kLimbDigits));
  out.limbs_.assign(big_endian.rbegin(), big_endian.rend());
  out.trim();
  return out;
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) {
    return limbs_.size() <=> rhs.limbs_.size();
  }
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = carry + limbs_[i];
    if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur % kLimbBase);
    carry = cur / kLimbBase;
    if (carry == 0 && i >= rhs.limbs_.size()) return *this;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (*this < rhs) {
    throw std::invalid_argument("BigNat subtraction underflow");
  }
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
  BigNat out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t a = lhs.limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry + a * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigNat& BigNat::mul_small(std::uint32_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(cur % kLimbBase);
    carry = cur / kLimbBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
    carry /= kLimbBase;
  }
  return *this;
}

BigNat& BigNat::add_small(std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
    std::uint64_t cur = limbs_[i] + carry;
    limbs_[i] = static_cast<std::uint32_t>(cur % kLimbBase);
    carry = cur / kLimbBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
    carry /= kLimbBase;
  }
  return *this;
}

std::uint64_t BigNat::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("modulus must be nonzero");
  unsigned __int128 r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    r = (r * kLimbBase + limbs_[i]) % m;
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t BigNat::decimal_digit_count() const {
  if (limbs_.empty()) return 1;
  std::size_t count = (limbs_.size() - 1) * kLimbDigits;
  std::uint32_t top = limbs_.back();
  while (top != 0) {
    ++count;
    top /= 10;
  }
  return count;
}

std::string BigNat::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  char buf[kLimbDigits + 1];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
    out.append(buf, kLimbDigits);
  }
  return out;
}

std::vector<std::uint8_t> BigNat::digits(std::uint32_t base) const {
  check_base(base);
  std::vector<std::uint8_t> out;
  if (limbs_.empty()) {
    out.push_back(0);
    return out;
  }
  if (base == 10) {
    out.reserve(limbs_.size() * kLimbDigits);
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
      std::uint32_t v = limbs_[i];
      for (unsigned d = 0; d < kLimbDigits; ++d) {
        out.push_back(static_cast<std::uint8_t>(v % 10));
        v /= 10;
      }
    }
    std::uint32_t v = limbs_.back();
    do {
      out.push_back(static_cast<std::uint8_t>(v % 10));
      v /= 10;
    } while (v != 0);
    return out;
  }

  // General base: repeated short division by the largest power of the base
  // below the limb base; each pass peels off `chunk_digits` digits.
  std::uint64_t chunk = base;
  unsigned chunk_digits = 1;
  while (chunk * base < kLimbBase) {
    chunk *= base;
    ++chunk_digits;
  }
  std::vector<std::uint32_t> tmp = limbs_;
  while (!tmp.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = tmp.size(); i-- > 0;) {
      std::uint64_t cur = rem * kLimbBase + tmp[i];
      tmp[i] = static_cast<std::uint32_t>(cur / chunk);
      rem = cur % chunk;
    }
    while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
    if (tmp.empty()) {
      do {
        out.push_back(static_cast<std::uint8_t>(rem % base));
        rem /= base;
      } while (rem != 0);
    } else {
      for (unsigned d = 0; d < chunk_digits; ++d) {
        out.push_back(static_cast<std::uint8_t>(rem % base));
        rem /= base;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> digits_of(const BigNat& x, std::uint32_t base) {
  return x.digits(base);
}

}  // namespace fibdig
