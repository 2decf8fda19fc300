#pragma once

#include <map>

#include "recperm/counts.hpp"
#include "recperm/params.hpp"
#include "recperm/rational.hpp"
#include "recperm/records.hpp"

namespace recperm {

/// theta^l zeta^u / (theta+zeta)_{n-1}.
Rational perm_probability(const Permutation& p, const TwoParam& params);

/// Distribution of the next initial rank i_j given a state with j-1 entries.
/// Rank 1 gets theta, rank j gets zeta, middles are uniform.
std::map<Value, Rational> step_law(const RecordProfile& state, Value j, const TwoParam& params);

/// Generalized step law. Rank 1 carries theta plus the alpha sum over the
/// lower records created so far, rank j the zeta analogue, and each
/// noncentral block k of current size s receives total mass s - alpha_k
/// split evenly over its s rank slots. The output sums to 1 exactly.
std::map<Value, Rational> step_law(const RecordProfile& state, Value j,
                                   const GeneralParams& params);

/// Probability of one rank under the generalized step law; O(records) time.
Rational step_rank_probability(const RecordProfile& state, Value j, Value rank,
                               const GeneralParams& params);

/// Per-rank reading of the generalized step display, which puts 1 - alpha_k
/// on every slot of block k. Does not normalize when a block has size >= 2;
/// kept for the errata report.
std::map<Value, Rational> step_law_literal(const RecordProfile& state, Value j,
                                           const GeneralParams& params);

/// Exact path product of the generalized step law along the permutation's
/// rank sequence. Constant on record-profile classes.
Rational general_perm_probability(const Permutation& p, const GeneralParams& params);

/// Closed form of the path product as a function of the centered composition:
///   prod_{j=0}^{l-1}(theta + A_{-j}) prod_{j=0}^{u-1}(zeta + A_j)
///   * prod_{k != 0} (1-alpha_k)_{lambda_k - 1} / (lambda_k - 1)!
///   / (theta+zeta)_{n-1},
/// with A_{-j} = alpha_{-1} + ... + alpha_{-j}. Equals
/// general_perm_probability for every permutation in the class.
Rational general_class_probability(const CenteredComposition& composition,
                                   const GeneralParams& params);

/// The closed form as printed elsewhere: record factors run j = 1..l and
/// j = 1..u, and the (lambda_k - 1)! divisors are absent. Kept for the
/// errata report; differs from the path product whenever some part exceeds 2.
Rational general_class_probability_printed(const CenteredComposition& composition,
                                           const GeneralParams& params);

}  // namespace recperm
