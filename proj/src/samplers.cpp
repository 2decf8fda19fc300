#include "recperm/samplers.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "recperm/rank_order.hpp"

namespace recperm {

namespace {

// Incrementally maintained profile of a growing permutation, fed by ranks.
struct ProfileBuilder {
  RecordProfile profile;

  void start() {
    profile = RecordProfile{};
    profile.values = {1};
    profile.times = {1};
    profile.lower_count = 0;
    profile.upper_count = 0;
    profile.n = 1;
  }

  // Push the initial rank of position m+1; every stored record value >= rank
  // shifts up by one.
  void push(Value rank) {
    const Value m = profile.n;
    for (Value& v : profile.values)
      if (v >= rank) ++v;
    if (rank == 1) {
      profile.values.insert(profile.values.begin(), 1);
      profile.times.insert(profile.times.begin(), m + 1);
      profile.lower_count += 1;
    } else if (rank == m + 1) {
      profile.values.push_back(m + 1);
      profile.times.push_back(m + 1);
      profile.upper_count += 1;
    }
    profile.n = m + 1;
  }
};

Value draw_two_param_rank(Value j, double theta, double zeta, Rng& rng) {
  const double denom = theta + zeta + static_cast<double>(j - 2);
  const double a = rng.next_double() * denom;
  if (a < theta) return 1;
  if (a < theta + static_cast<double>(j - 2)) {
    Value r = 2 + static_cast<Value>(a - theta);
    return std::min<Value>(r, j - 1);
  }
  return j;
}

// One rank under the generalized law: pick the category by one uniform, then
// the slot inside the chosen block uniformly.
Value draw_general_rank(const RecordProfile& state, Value j, const GeneralParams& params,
                        Rng& rng) {
  double w_low = params.theta.to_double();
  for (Value i = 1; i <= state.lower_count; ++i) w_low += params.alpha_at(-i).to_double();
  double w_high = params.zeta.to_double();
  for (Value i = 1; i <= state.upper_count; ++i) w_high += params.alpha_at(i).to_double();
  const double denom =
      params.theta.to_double() + params.zeta.to_double() + static_cast<double>(j - 2);
  double a = rng.next_double() * denom;
  if (a < w_low) return 1;
  a -= w_low;
  for (Value k = -state.lower_count; k <= state.upper_count; ++k) {
    if (k == 0) continue;
    const Value size = k > 0 ? state.value_at(k) - state.value_at(k - 1)
                             : state.value_at(k + 1) - state.value_at(k);
    const double weight = static_cast<double>(size) - params.alpha_at(k).to_double();
    if (a < weight) {
      const Value slot = static_cast<Value>(rng.next_below(static_cast<std::uint64_t>(size)));
      const Value base = k > 0 ? state.value_at(k - 1) : state.value_at(k);
      return base + 1 + slot;
    }
    a -= weight;
  }
  return j;
}

std::vector<Value> middle_shuffle(Value lo, Value hi, Rng& rng) {
  std::vector<Value> vals;
  for (Value v = lo; v <= hi; ++v) vals.push_back(v);
  for (std::size_t i = vals.size(); i > 1; --i)
    std::swap(vals[i - 1], vals[rng.next_below(i)]);
  return vals;
}

}  // namespace

Permutation sample_two_param(Value n, const TwoParam& params, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample needs n >= 1");
  const double theta = params.theta.to_double();
  const double zeta = params.zeta.to_double();
  std::vector<Value> ranks{1};
  for (Value j = 2; j <= n; ++j) ranks.push_back(draw_two_param_rank(j, theta, zeta, rng));
  return from_initial_ranks(InitialRanks(std::move(ranks)));
}

Permutation sample_two_param(Value n, const TwoParam& params, std::uint64_t seed) {
  Rng rng(seed);
  return sample_two_param(n, params, rng);
}

Permutation sample_general(Value n, const GeneralParams& params, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample needs n >= 1");
  validate_principal(params);
  ProfileBuilder builder;
  builder.start();
  std::vector<Value> ranks{1};
  for (Value j = 2; j <= n; ++j) {
    const Value rank = draw_general_rank(builder.profile, j, params, rng);
    ranks.push_back(rank);
    builder.push(rank);
  }
  return from_initial_ranks(InitialRanks(std::move(ranks)));
}

Permutation sample_general(Value n, const GeneralParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return sample_general(n, params, rng);
}

Permutation sample_limit(Value n, const LimitFamily& family, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample needs n >= 1");
  if (n == 1) return Permutation::identity(1);
  const double p = family.parameter.to_double();
  switch (family.kind) {
    case LimitKind::kBernoulliPyramid: {
      std::vector<Value> ranks{1};
      for (Value j = 2; j <= n; ++j) ranks.push_back(rng.next_double() < p ? 1 : j);
      return from_initial_ranks(InitialRanks(std::move(ranks)));
    }
    case LimitKind::kSingleRecord: {
      const bool ascending = rng.next_double() < p;
      std::vector<Value> word;
      word.push_back(ascending ? 1 : n);
      word.push_back(ascending ? n : 1);
      for (Value v : middle_shuffle(2, n - 1, rng)) word.push_back(v);
      return Permutation(std::move(word));
    }
    case LimitKind::kThetaZero: {
      Permutation inner =
          sample_two_param(n - 1, TwoParam(Rational(1), family.parameter), rng);
      std::vector<Value> word{1};
      for (Value v : inner.word()) word.push_back(v + 1);
      return Permutation(std::move(word));
    }
    case LimitKind::kZetaZero: {
      Permutation inner =
          sample_two_param(n - 1, TwoParam(family.parameter, Rational(1)), rng);
      std::vector<Value> word{n};
      for (Value v : inner.word()) word.push_back(v);
      return Permutation(std::move(word));
    }
  }
  throw std::logic_error("unknown limit family");
}

Permutation sample_limit(Value n, const LimitFamily& family, std::uint64_t seed) {
  Rng rng(seed);
  return sample_limit(n, family, rng);
}

ShapeDraw sample_from_shape_detailed(const TwoSidedShape& shape, Value n, Rng& rng) {
  shape.validate();
  if (!shape.has(0)) throw std::invalid_argument("shape needs a center entry");
  if (n < 1) throw std::invalid_argument("sample needs n >= 1");
  std::vector<double> xs;
  std::vector<Value> consumed;
  xs.reserve(static_cast<std::size_t>(n));
  xs.push_back(shape.rho_at(0));
  consumed.push_back(0);
  std::vector<int> branch{0};  // +1 up, -1 down, 0 keep/center
  Value lo = 0, hi = 0;
  double x_min = shape.rho_at(0), x_max = shape.rho_at(0);
  for (Value j = 2; j <= n; ++j) {
    const double w = rng.next_double();
    if (w > x_max) {
      if (!shape.has(hi + 1)) throw TruncationError("shape exhausted above");
      ++hi;
      xs.push_back(shape.rho_at(hi));
      consumed.push_back(hi);
      branch.push_back(+1);
      x_max = shape.rho_at(hi);
    } else if (w < x_min) {
      if (!shape.has(lo - 1)) throw TruncationError("shape exhausted below");
      --lo;
      xs.push_back(shape.rho_at(lo));
      consumed.push_back(lo);
      branch.push_back(-1);
      x_min = shape.rho_at(lo);
    } else {
      xs.push_back(w);
      branch.push_back(0);
    }
  }
  // tiebreaks for an initial constant run come from the branch taken
  Value run = 1;
  while (run < n && xs[static_cast<std::size_t>(run)] == xs[0]) ++run;
  std::vector<Tiebreak> ties;
  for (Value j = 2; j <= run; ++j) {
    const int b = branch[static_cast<std::size_t>(j - 1)];
    if (b == 0)
      throw std::invalid_argument("uniform draw collided with a shape entry");
    ties.push_back(b > 0 ? Tiebreak::kHigh : Tiebreak::kLow);
  }
  return ShapeDraw{from_initial_ranks(rank_order(xs, ties)), std::move(xs),
                   std::move(consumed)};
}

Permutation sample_from_shape(const TwoSidedShape& shape, Value n, Rng& rng) {
  return sample_from_shape_detailed(shape, n, rng).perm;
}

Permutation sample_from_shape(const TwoSidedShape& shape, Value n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_from_shape(shape, n, rng);
}

Permutation sample_conditioned(const RecordProfile& profile, Rng& rng) {
  profile.validate();
  const Value n = profile.n;
  std::vector<Value> word{profile.value_at(0)};
  // pool of not-yet-emitted values with O(1) removal
  std::vector<Value> pool;
  std::vector<std::size_t> where(static_cast<std::size_t>(n + 1), SIZE_MAX);
  for (Value v = 1; v <= n; ++v) {
    if (v == profile.value_at(0)) continue;
    where[static_cast<std::size_t>(v)] = pool.size();
    pool.push_back(v);
  }
  auto remove_value = [&](Value v) {
    const std::size_t idx = where[static_cast<std::size_t>(v)];
    const Value last = pool.back();
    pool[idx] = last;
    where[static_cast<std::size_t>(last)] = idx;
    pool.pop_back();
    where[static_cast<std::size_t>(v)] = SIZE_MAX;
  };
  Value lower_done = 0, upper_done = 0;
  Value cur_min = profile.value_at(0), cur_max = profile.value_at(0);
  for (Value j = 2; j <= n; ++j) {
    const Value v = pool[rng.next_below(pool.size())];
    Value out;
    if (v < cur_min) {
      out = profile.value_at(-(lower_done + 1));
      ++lower_done;
      cur_min = out;
    } else if (v > cur_max) {
      out = profile.value_at(upper_done + 1);
      ++upper_done;
      cur_max = out;
    } else {
      out = v;
    }
    remove_value(out);
    word.push_back(out);
  }
  Permutation result(std::move(word));
  const RecordProfile check = extract_records(result);
  if (check.values != profile.values)
    throw std::logic_error("conditioned sampler produced a different profile");
  return result;
}

Permutation sample_conditioned(const RecordProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  return sample_conditioned(profile, rng);
}

Permutation sample_integer_window(Value n, Value theta, Value zeta, Rng& rng) {
  if (theta < 1 || zeta < 1)
    throw std::invalid_argument("window sampler needs integer theta, zeta >= 1");
  if (n < 1) throw std::invalid_argument("sample needs n >= 1");
  const Value d = theta + zeta - 2;
  std::vector<double> sorted;  // all uniforms drawn so far
  auto insert_sorted = [&](double v) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
  };
  for (Value i = 0; i < d + 1; ++i) insert_sorted(rng.next_double());
  std::vector<double> xs;
  xs.push_back(sorted[static_cast<std::size_t>(theta - 1)]);
  double x_min = xs[0], x_max = xs[0];
  for (Value j = 2; j <= n; ++j) {
    const double w = rng.next_double();
    insert_sorted(w);
    double x;
    if (w > x_max) {
      // smallest pool value strictly above the running maximum
      auto it = std::upper_bound(sorted.begin(), sorted.end(), x_max);
      x = *it;
      x_max = x;
    } else if (w < x_min) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x_min);
      x = *(it - 1);
      x_min = x;
    } else {
      x = w;
    }
    xs.push_back(x);
  }
  return from_initial_ranks(rank_order(xs));
}

Permutation sample_integer_window(Value n, Value theta, Value zeta, std::uint64_t seed) {
  Rng rng(seed);
  return sample_integer_window(n, theta, zeta, rng);
}

Permutation window_projection(const Permutation& w, Value theta, Value zeta, Value n) {
  if (theta < 1 || zeta < 1)
    throw std::invalid_argument("window projection needs integer theta, zeta >= 1");
  const Value d = theta + zeta - 2;
  if (w.size() != n + d) throw std::invalid_argument("source word must have n + d entries");
  std::vector<Value> prefix_sorted;
  auto insert_sorted = [&](Value v) {
    prefix_sorted.insert(std::upper_bound(prefix_sorted.begin(), prefix_sorted.end(), v), v);
  };
  for (Value i = 1; i <= d + 1; ++i) insert_sorted(w.at(i));
  std::vector<Value> retained;
  retained.push_back(prefix_sorted[static_cast<std::size_t>(theta - 1)]);
  for (Value j = 2; j <= n; ++j) {
    const Value entry = w.at(d + j);
    insert_sorted(entry);
    const Value s = static_cast<Value>(std::lower_bound(prefix_sorted.begin(),
                                                        prefix_sorted.end(), entry) -
                                       prefix_sorted.begin()) +
                    1;
    Value pick;
    if (s >= theta && s <= j + theta - 1)
      pick = entry;
    else if (s <= theta - 1)
      pick = prefix_sorted[static_cast<std::size_t>(theta - 1)];
    else
      pick = prefix_sorted[static_cast<std::size_t>(j + theta - 2)];
    retained.push_back(pick);
  }
  return rank_word(retained);
}

StreamState::StreamState(GeneralParams params, std::uint64_t seed)
    : params_(std::move(params)), rng_(seed) {
  validate_principal(params_);
}

Permutation StreamState::current_permutation() const {
  return from_initial_ranks(InitialRanks(ranks_));
}

StreamState::Delta StreamState::step() {
  const Value j = size() + 1;
  Value rank;
  if (j == 1) {
    rank = 1;
  } else if (params_.all_alpha_zero()) {
    rank = draw_two_param_rank(j, params_.theta.to_double(), params_.zeta.to_double(), rng_);
  } else {
    rank = draw_general_rank(profile_, j, params_, rng_);
  }
  ranks_.push_back(rank);
  ProfileBuilder builder;
  if (j == 1) {
    builder.start();
  } else {
    builder.profile = std::move(profile_);
    builder.push(rank);
  }
  profile_ = std::move(builder.profile);
  return Delta{j, rank, rank == 1 && j > 1, rank == j && j > 1};
}

StreamState::Delta stream_next(StreamState& state) { return state.step(); }

std::string sample_record_json(const Permutation& p) {
  const RecordProfile profile = extract_records(p);
  nlohmann::json j;
  j["n"] = p.size();
  j["perm"] = format_permutation(p);
  j["l"] = profile.lower_count;
  j["u"] = profile.upper_count;
  j["record_values"] = profile.values;
  j["record_times"] = profile.times;
  return j.dump();
}

}  // namespace recperm
