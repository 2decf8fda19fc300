#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recperm/params.hpp"
#include "recperm/records.hpp"
#include "recperm/rng.hpp"
#include "recperm/shape.hpp"

namespace recperm {

/// Draws a permutation by sampling the initial ranks independently from the
/// two-parameter step law. Deterministic given the seed.
Permutation sample_two_param(Value n, const TwoParam& params, std::uint64_t seed);
Permutation sample_two_param(Value n, const TwoParam& params, Rng& rng);

/// Sequential draw from the generalized step law.
Permutation sample_general(Value n, const GeneralParams& params, std::uint64_t seed);
Permutation sample_general(Value n, const GeneralParams& params, Rng& rng);

/// Degenerate limit families. For the Bernoulli pyramid every initial rank
/// is extreme, lower with probability p, so p = 1 concentrates on
/// (n,...,1) and p = 0 on (1,...,n).
Permutation sample_limit(Value n, const LimitFamily& family, std::uint64_t seed);
Permutation sample_limit(Value n, const LimitFamily& family, Rng& rng);

struct ShapeDraw {
  Permutation perm;
  std::vector<double> xs;                 // the ranked sequence
  std::vector<Value> consumed_indices;    // shape indices in consumption order
};

/// Ranking construction against a fixed shape: X_1 = rho_0; a fresh uniform
/// above the running maximum consumes the next shape entry up, below the
/// running minimum the next entry down, and otherwise stands as is. Ties are
/// resolved by the repetition rules, with the branch taken supplying the
/// tiebreak inside an initial constant run. Throws TruncationError when the
/// shape runs out.
ShapeDraw sample_from_shape_detailed(const TwoSidedShape& shape, Value n, Rng& rng);
Permutation sample_from_shape(const TwoSidedShape& shape, Value n, std::uint64_t seed);
Permutation sample_from_shape(const TwoSidedShape& shape, Value n, Rng& rng);

/// Uniform permutation conditioned on an exact record profile (values only;
/// times are ignored). Draws values uniformly from the not-yet-emitted pool
/// and promotes any draw that would break the running extremes to the next
/// unconsumed record value. The output profile always equals the request.
Permutation sample_conditioned(const RecordProfile& profile, std::uint64_t seed);
Permutation sample_conditioned(const RecordProfile& profile, Rng& rng);

/// Integer-parameter window sampler: d = theta + zeta - 2 prehistoric
/// uniforms plus a stream, with forced releases of the order statistic just
/// beyond the running extremes. The ranking has the (theta, zeta) law.
Permutation sample_integer_window(Value n, Value theta, Value zeta, std::uint64_t seed);
Permutation sample_integer_window(Value n, Value theta, Value zeta, Rng& rng);

/// The deterministic finite projection behind the integer-parameter window:
/// maps a word on [n+d] to the ranking of the retained subsequence. Sends
/// the uniform law on [n+d] to the (theta, zeta) law on [n].
Permutation window_projection(const Permutation& w, Value theta, Value zeta, Value n);

/// One coherent stream of permutations under the generalized step law; the
/// record profile is maintained incrementally.
class StreamState {
 public:
  StreamState(GeneralParams params, std::uint64_t seed);

  Value size() const { return static_cast<Value>(ranks_.size()); }
  const RecordProfile& profile() const { return profile_; }
  const std::vector<Value>& ranks() const { return ranks_; }
  Permutation current_permutation() const;

  struct Delta {
    Value position;
    Value rank;
    bool lower_record;
    bool upper_record;
  };
  Delta step();

 private:
  GeneralParams params_;
  Rng rng_;
  std::vector<Value> ranks_;
  RecordProfile profile_;
};

StreamState::Delta stream_next(StreamState& state);

/// One sample line for CLI emission:
/// {"n":..,"perm":"..","l":..,"u":..,"record_values":[..],"record_times":[..]}.
std::string sample_record_json(const Permutation& p);

}  // namespace recperm
