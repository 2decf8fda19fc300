#include <doctest.h>

#include "recperm/enumerate.hpp"
#include "recperm/table.hpp"
#include "recperm/verify.hpp"

using namespace recperm;

TEST_CASE("uniform table at n = 3") {
  const DistTable table = pushforward_table(3, TwoParamLaw{TwoParam(Rational(1), Rational(1))});
  CHECK(table.probabilities.size() == 6);
  for (const auto& [p, prob] : table.probabilities) CHECK(prob == Rational(1, 6));
  CHECK(table.total() == Rational(1));
}

TEST_CASE("two-parameter table at n = 2") {
  const DistTable table = pushforward_table(2, TwoParamLaw{TwoParam(Rational(2), Rational(3))});
  CHECK(table.at(parse_permutation("1,2")) == Rational(3, 5));
  CHECK(table.at(parse_permutation("2,1")) == Rational(2, 5));
}

TEST_CASE("tables refuse to enumerate beyond the cap") {
  CHECK_THROWS_AS(pushforward_table(11, TwoParamLaw{TwoParam(Rational(1), Rational(1))}),
                  ResourceError);
}

TEST_CASE("limit families put mass where they should") {
  const DistTable pyramid = pushforward_table(
      4, LimitLaw{LimitFamily(LimitKind::kBernoulliPyramid, Rational(1, 3))});
  CHECK(pyramid.probabilities.size() == 8);  // every rank extreme
  CHECK(pyramid.total() == Rational(1));
  CHECK(pyramid.at(parse_permutation("4,3,2,1")) == Rational(1, 27));
  CHECK(pyramid.at(parse_permutation("1,2,3,4")) == Rational(8, 27));
  CHECK(pyramid.at(parse_permutation("2,1,4,3")).is_zero());  // 3 is not a record

  const DistTable single =
      pushforward_table(4, LimitLaw{LimitFamily(LimitKind::kSingleRecord, Rational(2, 5))});
  CHECK(single.probabilities.size() == 4);
  CHECK(single.at(parse_permutation("1,4,2,3")) == Rational(1, 5));   // (2/5) / 2!
  CHECK(single.at(parse_permutation("4,1,3,2")) == Rational(3, 10));  // (3/5) / 2!

  const DistTable theta0 =
      pushforward_table(3, LimitLaw{LimitFamily(LimitKind::kThetaZero, Rational(2))});
  CHECK(theta0.at(parse_permutation("1,2,3")) == Rational(2, 3));
  CHECK(theta0.at(parse_permutation("1,3,2")) == Rational(1, 3));

  const DistTable zeta0 =
      pushforward_table(3, LimitLaw{LimitFamily(LimitKind::kZetaZero, Rational(3, 2))});
  CHECK(zeta0.at(parse_permutation("3,2,1")) == Rational(3, 5));
  CHECK(zeta0.at(parse_permutation("3,1,2")) == Rational(2, 5));
}

TEST_CASE("fixed-shape tables sum to one when the shape is wide enough") {
  RationalShape shape;
  shape.rho = {Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(3, 10),
               Rational(2, 5),  Rational(7, 10), Rational(4, 5), Rational(9, 10),
               Rational(19, 20)};
  shape.center_index = 4;
  for (Value n = 1; n <= 5; ++n) {
    const DistTable table = pushforward_table(n, FixedShapeLaw{shape});
    CHECK(table.total() == Rational(1));
  }
  // the lone class of profile ([1], 3) gets rho1 complement times the gap
  const DistTable t3 = pushforward_table(3, FixedShapeLaw{shape});
  CHECK(t3.at(parse_permutation("1,3,2")) ==
        (Rational(1) - Rational(2, 5)) * (Rational(7, 10) - Rational(2, 5)));
}

TEST_CASE("fixed-shape tables raise on exhaustion with mass remaining") {
  RationalShape narrow;
  narrow.rho = {Rational(1, 4), Rational(1, 2)};
  narrow.center_index = 1;  // one upper entry, nothing below
  CHECK_THROWS_AS(pushforward_table(3, FixedShapeLaw{narrow}), TruncationError);
  // a zero boundary stops the recursion without error
  RationalShape pinned;
  pinned.rho = {Rational(0), Rational(1, 2), Rational(1)};
  pinned.center_index = 1;
  const DistTable table = pushforward_table(3, FixedShapeLaw{pinned});
  CHECK(table.total() == Rational(1));
}

TEST_CASE("coherence of the degenerate single-record family") {
  const LimitFamily family(LimitKind::kSingleRecord, Rational(2, 5));
  const DistTable big = pushforward_table(5, LimitLaw{family});
  const DistTable small = pushforward_table(4, LimitLaw{family});
  const DistTable projected = restrict_pushforward(big, 4);
  CHECK(projected.probabilities.size() == small.probabilities.size());
  for (const auto& [p, prob] : projected.probabilities) CHECK(small.at(p) == prob);
}

TEST_CASE("table serialization shapes") {
  const DistTable table = pushforward_table(2, TwoParamLaw{TwoParam(Rational(2), Rational(3))});
  CHECK(dist_table_to_json(table) ==
        R"({"entries":[{"p":"3/5","perm":"1,2"},{"p":"2/5","perm":"2,1"}],"n":2})");
  CHECK(dist_table_to_csv(table) == "perm,p\n\"1,2\",3/5\n\"2,1\",2/5\n");
}

TEST_CASE("record-count class probabilities") {
  const WTable table = w_table(TwoParam(Rational(1), Rational(1)), 4);
  CHECK(table.at(1, 0, 0) == Rational(1));
  CHECK(table.at(3, 1, 1) == Rational(1, 3));  // two permutations of six
  CHECK(table.at(2, 1, 0) == Rational(1, 2));
  CHECK(check_dual(table));
}

TEST_CASE("general-parameter class probabilities sum to one") {
  GeneralParams g;
  g.theta = Rational(1);
  g.zeta = Rational(2);
  g.alpha_tail = Rational(1, 2);
  const WTable table = w_table(g, 6);
  for (Value n = 1; n <= 6; ++n) {
    Rational sum(0);
    for (Value l = 0; l <= n - 1; ++l)
      for (Value u = 0; l + u <= n - 1; ++u) sum += table.at(n, l, u);
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("a perturbed table fails the dual recursion") {
  WTable table = w_table(TwoParam(Rational(1), Rational(1)), 4);
  table.w[{3, 1, 1}] += Rational(1, 1000);
  CHECK(!check_dual(table));
}

TEST_CASE("serialized record-count tables") {
  const WTable table = w_table(TwoParam(Rational(1), Rational(1)), 2);
  CHECK(w_table_to_json(table) ==
        R"({"entries":[{"l":0,"n":1,"u":0,"w":"1/1"},{"l":0,"n":2,"u":1,"w":"1/2"},{"l":1,"n":2,"u":0,"w":"1/2"}],"n_max":2})");
  CHECK(w_table_to_csv(table) == "n,l,u,w\n1,0,0,1/1\n2,0,1,1/2\n2,1,0,1/2\n");
}

TEST_CASE("indicator structure checks on exact tables") {
  const IndicatorReport uniform =
      check_indicator_structure(TwoParam(Rational(1), Rational(1)), 5);
  CHECK(uniform.records_independent);
  CHECK(uniform.types_iid_thinning);
  CHECK(uniform.allocation_uniform);

  const IndicatorReport tilted = check_indicator_structure(TwoParam(Rational(3), Rational(1)), 5);
  CHECK(tilted.records_independent);
  CHECK(tilted.types_iid_thinning);

  GeneralParams g;
  g.theta = Rational(1);
  g.zeta = Rational(1);
  g.alpha_tail = Rational(1, 2);
  const IndicatorReport broken = check_indicator_structure(g, 5);
  CHECK(!broken.records_independent);
}

TEST_CASE("exact moments from the step law match the table") {
  const TwoParam params(Rational(2), Rational(3));
  for (Value n = 1; n <= 7; ++n) {
    const DistTable table = pushforward_table(n, TwoParamLaw{params});
    Rational mean_from_table(0);
    for (const auto& [p, prob] : table.probabilities)
      mean_from_table += Rational(extract_records(p).lower_count) * prob;
    CHECK(mean_from_table == exact_lower_record_mean(params, n));
  }
}

TEST_CASE("reversed lower-record times match lower-record values in law") {
  // one-sided family: the reversed time vector and the value vector agree
  for (const Rational& theta : {Rational(1, 2), Rational(2)}) {
    const TwoParam params(theta, Rational(1));
    for (Value n = 2; n <= 6; ++n) {
      const DistTable table = pushforward_table(n, TwoParamLaw{params});
      std::map<std::vector<Value>, Rational> law_times, law_values;
      for (const auto& [p, prob] : table.probabilities) {
        const RecordProfile profile = extract_records(p);
        std::vector<Value> times, values;
        for (Value k = -profile.lower_count; k <= 0; ++k) times.push_back(profile.time_at(k));
        for (Value k = 0; k >= -profile.lower_count; --k)
          values.push_back(profile.value_at(k));
        law_times[times] += prob;
        law_values[values] += prob;
      }
      CHECK(law_times == law_values);
    }
  }
}
