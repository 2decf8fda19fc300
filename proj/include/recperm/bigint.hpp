#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recperm {

/// Arbitrary-precision unsigned integer. Limbs are base 1e9, least
/// significant first, no trailing zero limbs (zero is an empty limb vector).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);

  static BigUint from_decimal(const std::string& s);
  std::string to_decimal() const;
  double to_double() const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // requires fits_u64()

  int compare(const BigUint& o) const;
  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint& operator*=(const BigUint& o);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(const BigUint& a, const BigUint& b);

  /// Quotient and remainder; throws std::invalid_argument on division by zero.
  static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
  friend BigUint operator/(const BigUint& a, const BigUint& b);
  friend BigUint operator%(const BigUint& a, const BigUint& b);

 private:
  static constexpr std::uint32_t kBase = 1000000000u;
  std::vector<std::uint32_t> limbs_;
  void trim();
  friend class BigInt;
};

BigUint gcd(BigUint a, BigUint b);
BigUint pow(const BigUint& base, std::uint64_t e);

/// Signed arbitrary-precision integer.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);
  BigInt(BigUint mag, bool negative = false);

  static BigInt from_decimal(const std::string& s);
  std::string to_decimal() const;
  double to_double() const;

  bool is_zero() const { return mag_.is_zero(); }
  bool negative() const { return neg_; }
  const BigUint& magnitude() const { return mag_; }
  int sign() const { return mag_.is_zero() ? 0 : (neg_ ? -1 : 1); }

  int compare(const BigInt& o) const;
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  /// Truncated division (quotient rounds toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

 private:
  BigUint mag_;
  bool neg_ = false;
  void normalize() {
    if (mag_.is_zero()) neg_ = false;
  }
};

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace recperm
