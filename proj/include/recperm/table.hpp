#pragma once

#include <map>
#include <string>
#include <tuple>
#include <variant>

#include "recperm/params.hpp"
#include "recperm/rational.hpp"
#include "recperm/records.hpp"
#include "recperm/shape.hpp"
#include "recperm/step_law.hpp"

namespace recperm {

/// Exact distribution over the symmetric group on [n].
struct DistTable {
  Value n = 0;
  std::map<Permutation, Rational> probabilities;

  Rational total() const;
  Rational at(const Permutation& p) const;
};

struct TwoParamLaw {
  TwoParam params;
};
struct GeneralLaw {
  GeneralParams params;
};
struct LimitLaw {
  LimitFamily family;
};
/// Projection of the uniform law on [n+d] through the order-statistics
/// window, d = theta + zeta - 2; integer parameters only.
struct IntegerWindowLaw {
  Value theta;
  Value zeta;
};
struct FixedShapeLaw {
  RationalShape shape;
};

using Law = std::variant<TwoParamLaw, GeneralLaw, LimitLaw, IntegerWindowLaw, FixedShapeLaw>;

/// Exact probability of one permutation under a degenerate limit family.
Rational limit_probability(const Permutation& p, const LimitFamily& family);

/// Exact probability of one permutation under ranking against a fixed
/// rational shape. Returns 0 where the shape assigns no mass; throws
/// TruncationError when the shape would be consulted beyond its truncation
/// with positive probability.
Rational fixed_shape_probability(const Permutation& p, const RationalShape& shape);

/// Exact pushforward over the symmetric group; n is capped at 10
/// (ResourceError beyond).
DistTable pushforward_table(Value n, const Law& law);

/// Image of a table under restriction to [m].
DistTable restrict_pushforward(const DistTable& table, Value m);

std::string dist_table_to_json(const DistTable& table);
std::string dist_table_to_csv(const DistTable& table);

/// Class probabilities w_n(l,u) of the record counts, n = 1..n_max.
struct WTable {
  Value n_max = 0;
  std::map<std::tuple<Value, Value, Value>, Rational> w;

  Rational at(Value n, Value l, Value u) const;
};

WTable w_table(const TwoParam& params, Value n_max);
WTable w_table(const GeneralParams& params, Value n_max);

/// Verifies the dual recursion on the per-permutation weights
/// q_n(l,u) = w_n(l,u) / c(n,l,u):
///   q_n(l,u) = q_{n+1}(l+1,u) + q_{n+1}(l,u+1) + (n-1) q_{n+1}(l,u),
/// with q_1(0,0) = 1, exactly over the whole table. The class probabilities
/// themselves do not satisfy the recursion; dividing out the multiplicities
/// is what makes it dual to the counting recursion.
bool check_dual(const WTable& table);

std::string w_table_to_json(const WTable& table);
std::string w_table_to_csv(const WTable& table);

}  // namespace recperm
