#pragma once

#include <map>

#include "recperm/params.hpp"
#include "recperm/rational.hpp"

namespace recperm {

/// Polya-Eggenberger pmf on [n]:
///   binom(n-1, r-1) (theta)_{r-1} (zeta)_{n-r} / (theta+zeta)_{n-1}.
/// This is the exact law of the center pi_{n1} under the two-parameter
/// family. Throws std::invalid_argument when r is outside [1, n].
Rational pe_pmf(Value n, const TwoParam& params, Value r);

/// The display with (theta)_{n-1} (zeta)_{r-1} in the numerator. It does not
/// normalize; kept for the errata report.
Rational pe_pmf_printed(Value n, const TwoParam& params, Value r);

enum class ChainSide { kLower, kUpper };

/// One step of the record-value Markov chain under the two-parameter family,
/// conditionally on the center. On the lower side each value v in
/// {2,...,r-1} below the current record r is itself a record independently
/// with probability theta/(theta+v-1), which makes the next record value
/// distributed as the Polya-Eggenberger law pe_pmf(r, (theta,1), .)
/// conditioned on landing in [1, r-1]. The upper side is the mirror image on
/// the scale n+1-v with zeta. Returns an empty map at an absorbing state
/// (r = 1 on the lower side, r = n on the upper side); each nonempty row
/// sums to 1 exactly.
std::map<Value, Rational> record_chain_step(Value r, Value n, const TwoParam& params,
                                            ChainSide side);

}  // namespace recperm
