#pragma once

#include <stdexcept>
#include <vector>

#include "recperm/counts.hpp"
#include "recperm/records.hpp"

namespace recperm {

/// Number of permutations with the record profile encoded by the centered
/// composition: (n-1)! divided by the noncentral tail sums. The division is
/// exact.
BigCount d_count(const CenteredComposition& composition);

/// True iff mu extends lambda in the composition order: the centers align,
/// every shared part satisfies mu_k >= lambda_k, and mu may add parts on
/// either end.
bool extends(const CenteredComposition& lambda, const CenteredComposition& mu);

/// Number of saturated chains from lambda to mu, equivalently the number of
/// coherent extensions of one fixed permutation with profile lambda to
/// permutations with profile mu:
///   (m-n)! prod_k binom(mu_k-1, lambda_k-1) / prod_{new k} M_k,
/// with M_k the tail sums of mu over the indices mu adds. Throws
/// std::invalid_argument when mu does not extend lambda.
BigCount d_ext(const CenteredComposition& lambda, const CenteredComposition& mu);

/// d_ext(lambda, mu) / d_count(mu) through the falling-factorial closed form;
/// exactly equals the quotient of the two counts.
Rational martin_ratio(const CenteredComposition& lambda, const CenteredComposition& mu);

/// Immediate followers: increment one noncentral part, or append a 1 on
/// either side. Ordered: prepend, parts left to right, append.
std::vector<CenteredComposition> followers(const CenteredComposition& composition);

/// All centered compositions of n, ordered deterministically.
std::vector<CenteredComposition> enumerate_compositions(Value n);

/// Exhaustive count of centered compositions of n; equals 2^{n-3} (n+2) for
/// n >= 2.
BigCount composition_count(Value n);

/// Boundary function at a two-sided shape, given as the record-value limits
/// rho_k for k in [kmin, kmax] with rho_0 at center_index:
///   prod_{k=-l}^{-1} rho_{k+1} p_k^{lambda_k-1} / (lambda_k-1)!
///   prod_{k=1}^{u} (1 - rho_{k-1}) p_k^{lambda_k-1} / (lambda_k-1)!,
/// where p_k is the gap of block k. The factorial divisors order the block's
/// middles; they are what the extension-count ratios converge to, and without
/// them the level sums exceed one. Equals the probability of any one
/// permutation in the class under ranking against the fixed shape. Throws
/// TruncationError when lambda needs entries beyond the truncation.
double phi_boundary(const CenteredComposition& composition, const std::vector<double>& rho,
                    Value center_index);

/// Exact-rational variant used by pushforward tables and the errata report.
Rational phi_boundary_exact(const CenteredComposition& composition,
                            const std::vector<Rational>& rho, Value center_index);

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace recperm
