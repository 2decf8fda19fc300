#include "recperm/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace recperm {

BigUint::BigUint(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : s)
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal: " + s);
  BigUint out;
  std::size_t pos = s.size() % 9;
  if (pos != 0) out.limbs_.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(0, pos))));
  // accumulate 9 digits at a time: out = out*1e9 + chunk
  for (; pos < s.size(); pos += 9) {
    std::uint32_t chunk = static_cast<std::uint32_t>(std::stoul(s.substr(pos, 9)));
    std::uint64_t carry = chunk;
    for (auto& limb : out.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * kBase + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      out.limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  }
  out.trim();
  return out;
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::string s = std::to_string(limbs_.back());
  char buf[16];
  for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
    std::snprintf(buf, sizeof buf, "%09u", *it);
    s += buf;
  }
  return s;
}

double BigUint::to_double() const {
  double x = 0.0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) x = x * kBase + *it;
  return x;
}

bool BigUint::fits_u64() const {
  if (limbs_.size() > 3) return false;
  if (limbs_.size() < 3) return true;
  // 2^64-1 = 18446744073709551615 = 18*1e18 + 446744073*1e9 + 709551615
  if (limbs_[2] != 18u) return limbs_[2] < 18u;
  if (limbs_[1] != 446744073u) return limbs_[1] < 446744073u;
  return limbs_[0] <= 709551615u;
}

std::uint64_t BigUint::to_u64() const {
  std::uint64_t v = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
  return v;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry +
                        (i < o.limbs_.size() ? o.limbs_[i] : 0u);
    limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = static_cast<std::uint32_t>(cur / kBase);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(o) < 0) throw std::invalid_argument("BigUint subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  BigUint out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigUint::kBase);
      carry = cur / BigUint::kBase;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % BigUint::kBase);
      carry = cur / BigUint::kBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigUint& BigUint::operator*=(const BigUint& o) {
  *this = *this * o;
  return *this;
}

void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  if (a.compare(b) < 0) {
    q = BigUint();
    r = a;
    return;
  }
  if (b.limbs_.size() == 1) {
    BigUint out;
    out.limbs_.assign(a.limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = rem * kBase + a.limbs_[i];
      out.limbs_[i] = static_cast<std::uint32_t>(cur / b.limbs_[0]);
      rem = cur % b.limbs_[0];
    }
    out.trim();
    q = std::move(out);
    r = BigUint(rem);
    return;
  }
  // Schoolbook long division, one base-1e9 digit of quotient at a time,
  // with the trial digit found by binary search (numbers here are small).
  BigUint rem;
  BigUint quot;
  quot.limbs_.assign(a.limbs_.size(), 0);
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
    rem.trim();
    std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if ((b * BigUint(mid)).compare(rem) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    if (digit != 0) rem -= b * BigUint(digit);
    quot.limbs_[i] = digit;
  }
  quot.trim();
  q = std::move(quot);
  r = std::move(rem);
}

BigUint operator/(const BigUint& a, const BigUint& b) {
  BigUint q, r;
  BigUint::divmod(a, b, q, r);
  return q;
}

BigUint operator%(const BigUint& a, const BigUint& b) {
  BigUint q, r;
  BigUint::divmod(a, b, q, r);
  return r;
}

BigUint gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint pow(const BigUint& base, std::uint64_t e) {
  BigUint out(1), acc = base;
  while (e != 0) {
    if (e & 1) out *= acc;
    e >>= 1;
    if (e) acc *= acc;
  }
  return out;
}

BigInt::BigInt(std::int64_t v)
    : mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)),
      neg_(v < 0) {}

BigInt::BigInt(BigUint mag, bool negative) : mag_(std::move(mag)), neg_(negative) {
  normalize();
}

BigInt BigInt::from_decimal(const std::string& s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+'))
    return BigInt(BigUint::from_decimal(s.substr(1)), s[0] == '-');
  return BigInt(BigUint::from_decimal(s), false);
}

std::string BigInt::to_decimal() const {
  return neg_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
}

double BigInt::to_double() const {
  double x = mag_.to_double();
  return neg_ ? -x : x;
}

int BigInt::compare(const BigInt& o) const {
  int s = sign(), t = o.sign();
  if (s != t) return s < t ? -1 : 1;
  int c = mag_.compare(o.mag_);
  return s < 0 ? -c : c;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.mag_.is_zero()) out.neg_ = !out.neg_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    mag_ += o.mag_;
  } else if (mag_.compare(o.mag_) >= 0) {
    mag_ -= o.mag_;
  } else {
    mag_ = o.mag_ - mag_;
    neg_ = o.neg_;
  }
  normalize();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  mag_ *= o.mag_;
  neg_ = neg_ != o.neg_;
  normalize();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  BigUint qm, rm;
  BigUint::divmod(a.mag_, b.mag_, qm, rm);
  q = BigInt(std::move(qm), a.neg_ != b.neg_);
  r = BigInt(std::move(rm), a.neg_);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return BigInt(gcd(a.magnitude(), b.magnitude()), false);
}

}  // namespace recperm
