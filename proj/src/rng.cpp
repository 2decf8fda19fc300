#include "recperm/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace recperm {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed ^ ((stream + 1) * 0x9E3779B97F4A7C15ull);
  s_[0] = splitmix64(x);
  s_[1] = splitmix64(x);
  s_[2] = splitmix64(x);
  s_[3] = splitmix64(x);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below(0)");
  if (n == 1) return 0;
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t v;
  do {
    v = next_u64() & mask;
  } while (v >= n);
  return v;
}

double Rng::next_normal() {
  const double u1 = next_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586477 * u2);
}

double Rng::next_gamma(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("gamma shape must be positive");
  if (a < 1.0) {
    const double u = next_double();
    return next_gamma(a + 1.0) * std::pow(1.0 - u, 1.0 / a);
  }
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::next_beta(double a, double b) {
  if (b == 1.0) return std::pow(1.0 - next_double(), 1.0 / a);
  if (a == 1.0) return 1.0 - std::pow(1.0 - next_double(), 1.0 / b);
  const double x = next_gamma(a);
  const double y = next_gamma(b);
  return x / (x + y);
}

}  // namespace recperm
