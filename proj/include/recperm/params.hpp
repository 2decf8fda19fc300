#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "recperm/permutation.hpp"
#include "recperm/rational.hpp"

namespace recperm {

/// Parameters of the two-sided record-tilted family: theta weights lower
/// records, zeta upper records; both strictly positive.
struct TwoParam {
  Rational theta;
  Rational zeta;

  TwoParam(Rational t, Rational z);
};

/// Multiparametric extension: block weights alpha_k for k != 0, given as a
/// finite map plus a default for all unlisted indices. The principal domain
/// requires 1 - alpha_k > 0 for every k and all prefix sums
/// theta + alpha_{-1} + ... + alpha_{-l}, zeta + alpha_1 + ... + alpha_u to
/// stay positive; with a finite map this is checked analytically through the
/// tail default.
struct GeneralParams {
  Rational theta;
  Rational zeta;
  std::map<Value, Rational> alpha;  // keys != 0
  Rational alpha_tail;              // value of alpha_k for unlisted k

  Rational alpha_at(Value k) const;
  bool all_alpha_zero() const;
};

/// Throws std::domain_error when the parameters leave the principal domain.
void validate_principal(const GeneralParams& params);

GeneralParams general_from(const TwoParam& params);

/// Degenerate limits of the two-parameter family.
enum class LimitKind {
  kBernoulliPyramid,  // every position a record; lower with probability p
  kSingleRecord,      // word starts (1,n) w.p. p else (n,1); middle uniform
  kThetaZero,         // word = (1, shifted (1,zeta)-word)
  kZetaZero,          // word = (n, (theta,1)-word)
};

struct LimitFamily {
  LimitKind kind;
  Rational parameter;  // p in [0,1] for the first two; zeta/theta otherwise

  LimitFamily(LimitKind k, Rational param);
};

/// Parses "k:v,k:v,...;tail:v" with rational values; the tail clause is
/// optional and defaults to 0.
GeneralParams parse_alpha_spec(const Rational& theta, const Rational& zeta,
                               const std::string& spec);

}  // namespace recperm
