#pragma once

#include <cstdint>

namespace recperm {

/// xoshiro256** seeded through splitmix64. Substreams for parallel Monte
/// Carlo come from counter-based splitting: stream s of seed x is seeded
/// from splitmix64(x XOR (s+1)*golden). All sampling algorithms in this
/// library are written against this generator only, so identical seeds give
/// identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0,1) with 53 random bits.
  double next_double();
  /// Uniform on {0,...,n-1} by bitmask rejection.
  std::uint64_t next_below(std::uint64_t n);

  /// Standard normal via Box-Muller (two uniforms per call).
  double next_normal();
  /// Gamma(a) via Marsaglia-Tsang, with the boost step for a < 1.
  double next_gamma(double a);
  /// Beta(a,b); beta(a,1) and beta(1,b) use inverse transforms, the rest the
  /// two-gamma composition.
  double next_beta(double a, double b);

 private:
  std::uint64_t s_[4];
};

}  // namespace recperm
