#include "recperm/pe.hpp"

#include <stdexcept>

#include "recperm/counts.hpp"

namespace recperm {

Rational pe_pmf(Value n, const TwoParam& params, Value r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("pe_pmf needs 1 <= r <= n");
  return Rational(BigInt(binomial(n - 1, r - 1))) *
         rising_factorial(params.theta, r - 1) * rising_factorial(params.zeta, n - r) /
         rising_factorial(params.theta + params.zeta, n - 1);
}

Rational pe_pmf_printed(Value n, const TwoParam& params, Value r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("pe_pmf needs 1 <= r <= n");
  return Rational(BigInt(binomial(n - 1, r - 1))) *
         rising_factorial(params.theta, n - 1) * rising_factorial(params.zeta, r - 1) /
         rising_factorial(params.theta + params.zeta, n - 1);
}

std::map<Value, Rational> record_chain_step(Value r, Value n, const TwoParam& params,
                                            ChainSide side) {
  if (r < 1 || r > n) throw std::invalid_argument("record value out of range");
  std::map<Value, Rational> out;
  if (side == ChainSide::kLower) {
    if (r == 1) return out;  // absorbed
    const TwoParam down(params.theta, Rational(1));
    const Rational stay = pe_pmf(r, down, r);
    for (Value v = 1; v <= r - 1; ++v) out[v] = pe_pmf(r, down, v) / (Rational(1) - stay);
    return out;
  }
  if (r == n) return out;  // absorbed
  const TwoParam up(params.zeta, Rational(1));
  const Value m = n - r + 1;
  const Rational stay = pe_pmf(m, up, m);
  for (Value y = r + 1; y <= n; ++y)
    out[y] = pe_pmf(m, up, n + 1 - y) / (Rational(1) - stay);
  return out;
}

}  // namespace recperm
