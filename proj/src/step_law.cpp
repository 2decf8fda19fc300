#include "recperm/step_law.hpp"

#include <stdexcept>

namespace recperm {

Rational perm_probability(const Permutation& p, const TwoParam& params) {
  const RecordProfile profile = extract_records(p);
  return pow(params.theta, profile.lower_count) * pow(params.zeta, profile.upper_count) /
         rising_factorial(params.theta + params.zeta, p.size() - 1);
}

namespace {

void check_state(const RecordProfile& state, Value j) {
  if (j < 2 || state.n != j - 1)
    throw std::invalid_argument("step law needs a state of size j-1 with j >= 2");
}

// Block label of a middle rank slot r in [2, j-1]: left block k covers
// slots (r_k, r_{k+1}], right block k covers (r_{k-1}, r_k].
Value slot_block(const RecordProfile& state, Value r) {
  if (r <= state.value_at(0)) {
    Value k = -1;
    while (r <= state.value_at(k)) --k;
    return k;
  }
  Value k = 1;
  while (r > state.value_at(k)) ++k;
  return k;
}

Value block_size(const RecordProfile& state, Value k) {
  return k > 0 ? state.value_at(k) - state.value_at(k - 1)
               : state.value_at(k + 1) - state.value_at(k);
}

Rational lower_weight(const RecordProfile& state, const GeneralParams& params) {
  Rational w = params.theta;
  for (Value i = 1; i <= state.lower_count; ++i) w += params.alpha_at(-i);
  return w;
}

Rational upper_weight(const RecordProfile& state, const GeneralParams& params) {
  Rational w = params.zeta;
  for (Value i = 1; i <= state.upper_count; ++i) w += params.alpha_at(i);
  return w;
}

}  // namespace

std::map<Value, Rational> step_law(const RecordProfile& state, Value j,
                                   const TwoParam& params) {
  check_state(state, j);
  const Rational denom = params.theta + params.zeta + Rational(j - 2);
  std::map<Value, Rational> out;
  out[1] = params.theta / denom;
  for (Value r = 2; r <= j - 1; ++r) out[r] = Rational(1) / denom;
  out[j] = params.zeta / denom;
  return out;
}

std::map<Value, Rational> step_law(const RecordProfile& state, Value j,
                                   const GeneralParams& params) {
  check_state(state, j);
  validate_principal(params);
  const Rational denom = params.theta + params.zeta + Rational(j - 2);
  std::map<Value, Rational> out;
  out[1] = lower_weight(state, params) / denom;
  for (Value r = 2; r <= j - 1; ++r) {
    const Value k = slot_block(state, r);
    const Rational size(block_size(state, k));
    out[r] = (size - params.alpha_at(k)) / size / denom;
  }
  out[j] = upper_weight(state, params) / denom;
  return out;
}

Rational step_rank_probability(const RecordProfile& state, Value j, Value rank,
                               const GeneralParams& params) {
  check_state(state, j);
  if (rank < 1 || rank > j) throw std::invalid_argument("rank out of range");
  const Rational denom = params.theta + params.zeta + Rational(j - 2);
  if (rank == 1) return lower_weight(state, params) / denom;
  if (rank == j) return upper_weight(state, params) / denom;
  const Value k = slot_block(state, rank);
  const Rational size(block_size(state, k));
  return (size - params.alpha_at(k)) / size / denom;
}

std::map<Value, Rational> step_law_literal(const RecordProfile& state, Value j,
                                           const GeneralParams& params) {
  check_state(state, j);
  const Rational denom = params.theta + params.zeta + Rational(j - 2);
  std::map<Value, Rational> out;
  out[1] = lower_weight(state, params) / denom;
  for (Value r = 2; r <= j - 1; ++r) {
    const Value k = slot_block(state, r);
    out[r] = (Rational(1) - params.alpha_at(k)) / denom;
  }
  out[j] = upper_weight(state, params) / denom;
  return out;
}

Rational general_perm_probability(const Permutation& p, const GeneralParams& params) {
  validate_principal(params);
  const InitialRanks ranks = to_initial_ranks(p);
  Rational prob(1);
  for (Value j = 2; j <= p.size(); ++j) {
    const RecordProfile state = extract_records(restrict(p, j - 1));
    prob *= step_rank_probability(state, j, ranks.at(j), params);
  }
  return prob;
}

Rational general_class_probability(const CenteredComposition& composition,
                                   const GeneralParams& params) {
  composition.validate();
  const Value l = composition.lower_count;
  const Value u = composition.upper_count();
  const Value n = composition.degree();
  Rational num(1);
  Rational prefix = params.theta;
  for (Value j = 0; j < l; ++j) {
    num *= prefix;
    prefix += params.alpha_at(-(j + 1));
  }
  prefix = params.zeta;
  for (Value j = 0; j < u; ++j) {
    num *= prefix;
    prefix += params.alpha_at(j + 1);
  }
  for (Value k = -l; k <= u; ++k) {
    if (k == 0) continue;
    const Value part = composition.part_at(k);
    num *= rising_factorial(Rational(1) - params.alpha_at(k), part - 1);
    num /= Rational(BigInt(factorial(part - 1)));
  }
  return num / rising_factorial(params.theta + params.zeta, n - 1);
}

Rational general_class_probability_printed(const CenteredComposition& composition,
                                           const GeneralParams& params) {
  composition.validate();
  const Value l = composition.lower_count;
  const Value u = composition.upper_count();
  const Value n = composition.degree();
  Rational num(1);
  Rational prefix = params.theta;
  for (Value j = 1; j <= l; ++j) {
    prefix += params.alpha_at(-j);
    num *= prefix;
  }
  prefix = params.zeta;
  for (Value j = 1; j <= u; ++j) {
    prefix += params.alpha_at(j);
    num *= prefix;
  }
  for (Value k = -l; k <= u; ++k) {
    if (k == 0) continue;
    num *= rising_factorial(Rational(1) - params.alpha_at(k), composition.part_at(k) - 1);
  }
  return num / rising_factorial(params.theta + params.zeta, n - 1);
}

}  // namespace recperm
