#pragma once

#include <cstdint>

#include "recperm/bigint.hpp"
#include "recperm/params.hpp"
#include "recperm/rational.hpp"

namespace recperm {

using BigCount = BigUint;

BigCount factorial(Value n);
BigCount binomial(Value n, Value k);

/// Signless Stirling number of the first kind: permutations of [n] with r
/// cycles, equivalently with r lower records in one-row notation.
BigCount stirling1(Value n, Value r);

/// Number of permutations of [n] with l proper lower and u proper upper
/// records, by the two-sided recursion
///   c(n,l,u) = c(n-1,l-1,u) + c(n-1,l,u-1) + (n-2) c(n-1,l,u).
/// Returns 0 outside the support.
BigCount record_stirling(Value n, Value l, Value u);

/// Same count through the Stirling identity c(n,l,u) = s(n-1,l+u) C(l+u,l);
/// an independent computation used for cross-checks.
BigCount record_stirling_via_identity(Value n, Value l, Value u);

/// True iff sum_{l,u} c(n,l,u) theta^l zeta^u equals the rising factorial
/// (theta+zeta)_{n-1}, in exact arithmetic.
bool check_generating_function(Value n, const TwoParam& params);

/// Number of permutations of [n2] with record counts (l2,u2) whose
/// restriction to [n] has record counts (l,u). Dynamic programming over
/// (size, l, u); n2 is capped at 60.
BigCount extension_count(Value n, Value l, Value u, Value n2, Value l2, Value u2);

}  // namespace recperm
