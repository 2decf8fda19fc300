#include <doctest.h>

#include <cmath>
#include <map>

#include "recperm/samplers.hpp"
#include "recperm/stats.hpp"
#include "recperm/table.hpp"

using namespace recperm;

namespace {

template <typename DrawFn>
DivergenceReport divergence_against(const DistTable& table, DrawFn draw, std::uint64_t n_draws,
                                    std::uint64_t seed) {
  Rng rng(seed);
  std::map<Permutation, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < n_draws; ++i) counts[draw(rng)] += 1;
  return compare_exact_empirical(table, counts);
}

}  // namespace

TEST_CASE("samplers are deterministic given the seed") {
  const TwoParam params(Rational(2), Rational(3));
  CHECK(sample_two_param(8, params, 99) == sample_two_param(8, params, 99));
  CHECK(sample_two_param(8, params, 99) != sample_two_param(8, params, 100));
  const RecordProfile profile = composition_to_profile(parse_composition("3,1,^1,3,2"));
  CHECK(sample_conditioned(profile, 7) == sample_conditioned(profile, 7));
  CHECK(sample_integer_window(6, 2, 2, 5) == sample_integer_window(6, 2, 2, 5));
}

TEST_CASE("size-one samples are the identity") {
  CHECK(sample_two_param(1, TwoParam(Rational(2), Rational(3)), 1) == parse_permutation("1"));
  GeneralParams g;
  g.theta = Rational(1);
  g.zeta = Rational(1);
  g.alpha_tail = Rational(1, 2);
  CHECK(sample_general(1, g, 1) == parse_permutation("1"));
  CHECK(sample_limit(1, LimitFamily(LimitKind::kSingleRecord, Rational(1, 2)), 1) ==
        parse_permutation("1"));
}

TEST_CASE("two-param sampler matches its table at modest scale") {
  const TwoParam params(Rational(2), Rational(3));
  const DistTable table = pushforward_table(3, TwoParamLaw{params});
  const auto report = divergence_against(
      table, [&](Rng& r) { return sample_two_param(3, params, r); }, 40000, 31);
  CHECK(report.p_value > 1e-3);
  CHECK(!report.zero_cell_violation);
}

TEST_CASE("uniform sampler total variation at n = 5 with 1e5 draws") {
  const TwoParam uniform(Rational(1), Rational(1));
  const DistTable table = pushforward_table(5, TwoParamLaw{uniform});
  const auto report = divergence_against(
      table, [&](Rng& r) { return sample_two_param(5, uniform, r); }, 100000, 97);
  CHECK(report.total_variation < 0.02);
}

TEST_CASE("general sampler with zero alpha tracks the two-param law") {
  GeneralParams zero;
  zero.theta = Rational(2);
  zero.zeta = Rational(3);
  zero.alpha_tail = Rational(0);
  const DistTable table = pushforward_table(4, TwoParamLaw{TwoParam(Rational(2), Rational(3))});
  const auto report = divergence_against(
      table, [&](Rng& r) { return sample_general(4, zero, r); }, 50000, 32);
  CHECK(report.p_value > 1e-3);
  CHECK(report.total_variation < 0.02);
}

TEST_CASE("single-record family always has one proper record") {
  Rng rng(17);
  const LimitFamily family(LimitKind::kSingleRecord, Rational(1));
  for (int i = 0; i < 200; ++i) {
    const Permutation p = sample_limit(4, family, rng);
    CHECK(p.at(1) == 1);
    CHECK(p.at(2) == 4);
    const RecordProfile profile = extract_records(p);
    CHECK(profile.lower_count + profile.upper_count == 1);
  }
}

TEST_CASE("conditioned sampler hits the requested profile on every draw") {
  const RecordProfile profile = composition_to_profile(parse_composition("3,1,^1,3,2"));
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const Permutation p = sample_conditioned(profile, rng);
    const RecordProfile got = extract_records(p);
    CHECK(got.values == profile.values);
    CHECK(got.lower_count == profile.lower_count);
  }
}

TEST_CASE("conditioned sampler in a tiny class is uniform") {
  const RecordProfile profile = parse_profile("1,[2],3");
  Rng rng(29);
  std::map<Permutation, int> counts;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) counts[sample_conditioned(profile, rng)] += 1;
  REQUIRE(counts.size() == 2);  // d = 2
  for (const auto& [p, c] : counts)
    CHECK(std::abs(c - draws / 2) < 4 * std::sqrt(draws * 0.25));
}

TEST_CASE("conditioned sampler rejects inconsistent profiles") {
  RecordProfile bad;
  bad.values = {1, 3};
  bad.lower_count = 0;
  bad.upper_count = 1;
  bad.n = 2;  // top record must equal n
  CHECK_THROWS_AS(sample_conditioned(bad, 3), std::invalid_argument);
}

TEST_CASE("stream prefixes are coherent") {
  GeneralParams zero;
  zero.theta = Rational(2);
  zero.zeta = Rational(1);
  zero.alpha_tail = Rational(0);
  StreamState stream(zero, 51);
  for (int i = 0; i < 5; ++i) stream_next(stream);
  const Permutation at5 = stream.current_permutation();
  CHECK(at5.size() == 5);
  for (int i = 0; i < 4; ++i) stream_next(stream);
  const Permutation at9 = stream.current_permutation();
  CHECK(restrict(at9, 5) == at5);
  // the incrementally maintained profile matches a fresh extraction
  const RecordProfile fresh = extract_records(at9);
  CHECK(stream.profile().values == fresh.values);
  CHECK(stream.profile().times == fresh.times);
}

TEST_CASE("first stream step yields the singleton") {
  GeneralParams zero;
  zero.theta = Rational(1);
  zero.zeta = Rational(1);
  zero.alpha_tail = Rational(0);
  StreamState stream(zero, 3);
  const auto delta = stream_next(stream);
  CHECK(delta.position == 1);
  CHECK(delta.rank == 1);
  CHECK(stream.current_permutation() == parse_permutation("1"));
}

TEST_CASE("running lower-record count tracks the exact mean") {
  GeneralParams params;
  params.theta = Rational(2);
  params.zeta = Rational(1);
  params.alpha_tail = Rational(0);
  StreamState stream(params, 77);
  const Value n = 10000;
  for (Value i = 0; i < n; ++i) stream_next(stream);
  const double lower = static_cast<double>(stream.profile().lower_count);
  double mean = 0.0, var = 0.0;
  for (Value j = 2; j <= n; ++j) {
    const double p = 2.0 / (3.0 + static_cast<double>(j - 2));
    mean += p;
    var += p * (1.0 - p);
  }
  CHECK(std::abs(lower - mean) < 4.0 * std::sqrt(var));
  CHECK(std::abs(mean / (2.0 * std::log(static_cast<double>(n))) - 1.0) < 0.25);
}

TEST_CASE("shape sampler structural check: records consume shape entries in order") {
  Rng rng(41);
  const TwoParam params(Rational(2), Rational(2));
  for (int i = 0; i < 200; ++i) {
    const TwoSidedShape shape = sample_shape(params, 12, rng);
    const ShapeDraw draw = sample_from_shape_detailed(shape, 8, rng);
    const RecordProfile profile = extract_records(draw.perm);
    // consumed indices, sorted, are exactly the profile's record index range
    std::vector<Value> sorted = draw.consumed_indices;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(static_cast<Value>(sorted.size()) ==
            profile.lower_count + profile.upper_count + 1);
    CHECK(sorted.front() == -profile.lower_count);
    CHECK(sorted.back() == profile.upper_count);
    // the record values of the draw are the consumed shape entries: position
    // of record k in the word carries X value rho_k
    for (Value k = -profile.lower_count; k <= profile.upper_count; ++k) {
      const Value time = profile.time_at(k);
      CHECK(draw.xs[static_cast<std::size_t>(time - 1)] ==
            doctest::Approx(shape.rho_at(k)));
    }
  }
}

TEST_CASE("constant shape produces the Bernoulli pyramid") {
  TwoSidedShape constant;
  constant.rho.assign(9, 0.3);
  constant.center_index = 4;
  Rng rng(43);
  Value lower = 0, total = 0;
  for (int i = 0; i < 20000; ++i) {
    const Permutation p = sample_from_shape(constant, 4, rng);
    const RecordProfile profile = extract_records(p);
    CHECK(profile.lower_count + profile.upper_count == 3);
    lower += profile.lower_count;
    total += 3;
  }
  // lower records appear with probability p = 0.3
  const double freq = static_cast<double>(lower) / static_cast<double>(total);
  CHECK(std::abs(freq - 0.3) < 0.02);
}

TEST_CASE("single-proper-record shape") {
  TwoSidedShape pinned;
  pinned.rho = {0.0, 0.0, 1.0, 1.0};
  pinned.center_index = 1;  // (rho_0, rho_1) = (0, 1)
  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    const RecordProfile profile = extract_records(sample_from_shape(pinned, 5, rng));
    CHECK(profile.lower_count + profile.upper_count == 1);
  }
}

TEST_CASE("zero gaps repeat record values and still match the exact law") {
  // two lower entries share the value 0.2; the second consumption is a
  // repeated running minimum resolved by the repetition rules
  RationalShape shape;
  shape.rho = {Rational(1, 10), Rational(1, 5), Rational(1, 5),  Rational(1, 2),
               Rational(9, 10), Rational(19, 20), Rational(24, 25)};
  shape.center_index = 3;
  const DistTable table = pushforward_table(4, FixedShapeLaw{shape});
  CHECK(table.total() == Rational(1));
  const TwoSidedShape real_shape = shape.to_real();
  const auto report = divergence_against(
      table, [&](Rng& r) { return sample_from_shape(real_shape, 4, r); }, 100000, 67);
  CHECK(report.p_value > 1e-3);
  CHECK(!report.zero_cell_violation);
}

TEST_CASE("shape sampler raises when the truncation is exhausted") {
  TwoSidedShape tiny;
  tiny.rho = {0.4, 0.6};
  tiny.center_index = 0;
  bool saw_truncation = false;
  Rng rng(53);
  for (int i = 0; i < 50 && !saw_truncation; ++i) {
    try {
      sample_from_shape(tiny, 6, rng);
    } catch (const TruncationError&) {
      saw_truncation = true;
    }
  }
  CHECK(saw_truncation);
}

TEST_CASE("window projection maps the worked example sizes") {
  CHECK_THROWS_AS(window_projection(parse_permutation("1,2,3"), 2, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_integer_window(3, 0, 2, 1), std::invalid_argument);
  // theta = zeta = 1 degenerates to plain ranking
  const Permutation w = parse_permutation("3,1,4,2");
  CHECK(window_projection(w, 1, 1, 4) == w);
}

TEST_CASE("restricted samples follow the smaller table") {
  const TwoParam params(Rational(2), Rational(3));
  const DistTable table = pushforward_table(4, TwoParamLaw{params});
  const auto report = divergence_against(
      table, [&](Rng& r) { return restrict(sample_two_param(8, params, r), 4); }, 50000, 61);
  CHECK(report.p_value > 1e-3);
}

TEST_CASE("sample emission format") {
  const std::string line = sample_record_json(parse_permutation("2,3,1"));
  CHECK(line ==
        R"({"l":1,"n":3,"perm":"2,3,1","record_times":[3,1,2],"record_values":[1,2,3],"u":1})");
}
