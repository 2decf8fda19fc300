#pragma once

#include <cstdint>
#include <string>

#include "recperm/bigint.hpp"

namespace recperm {

/// Exact rational number, always kept reduced with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a/b", "a" or "-a/b" with decimal integers.
  static Rational parse(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  int sign() const { return num_.sign(); }

  double to_double() const;
  /// "a/b", or just "a" when the denominator is 1.
  std::string to_string() const;
  /// Always "a/b", including "a/1"; the wire form used in JSON and CSV.
  std::string to_fraction_string() const;

  int compare(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

 private:
  BigInt num_;
  BigInt den_;  // > 0
  void reduce();
};

/// x(x+1)...(x+m-1); empty product for m = 0.
Rational rising_factorial(const Rational& x, std::int64_t m);
/// x(x-1)...(x-m+1); empty product for m = 0.
Rational falling_factorial(const Rational& x, std::int64_t m);
Rational pow(const Rational& base, std::int64_t e);

}  // namespace recperm
