#include "recperm/rational.hpp"

#include <stdexcept>

namespace recperm {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational with zero denominator");
  if (den_.negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_decimal(s));
  return Rational(BigInt::from_decimal(s.substr(0, slash)),
                  BigInt::from_decimal(s.substr(slash + 1)));
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_decimal();
  return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string Rational::to_fraction_string() const {
  return num_.to_decimal() + "/" + den_.to_decimal();
}

int Rational::compare(const Rational& o) const {
  return (num_ * o.den_).compare(o.num_ * den_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  if (den_.negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  reduce();
  return *this;
}

Rational rising_factorial(const Rational& x, std::int64_t m) {
  Rational out(1);
  Rational cur = x;
  for (std::int64_t i = 0; i < m; ++i) {
    out *= cur;
    cur += Rational(1);
  }
  return out;
}

Rational falling_factorial(const Rational& x, std::int64_t m) {
  Rational out(1);
  Rational cur = x;
  for (std::int64_t i = 0; i < m; ++i) {
    out *= cur;
    cur -= Rational(1);
  }
  return out;
}

Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) return Rational(1) / pow(base, -e);
  Rational out(1), acc = base;
  while (e != 0) {
    if (e & 1) out *= acc;
    e >>= 1;
    if (e) acc *= acc;
  }
  return out;
}

}  // namespace recperm
