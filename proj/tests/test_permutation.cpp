#include <doctest.h>

#include <map>

#include "recperm/enumerate.hpp"
#include "recperm/permutation.hpp"
#include "recperm/records.hpp"

using namespace recperm;

TEST_CASE("initial ranks by direct counting") {
  CHECK(to_initial_ranks(parse_permutation("1")).ranks() == std::vector<Value>{1});
  CHECK(to_initial_ranks(parse_permutation("3,2,7,6,1,4,8,5")).ranks() ==
        std::vector<Value>{1, 1, 3, 3, 1, 4, 7, 5});
  CHECK(to_initial_ranks(parse_permutation("2,3,1")).ranks() == std::vector<Value>{1, 2, 1});
}

TEST_CASE("decoding inverts the rank encoding") {
  CHECK(from_initial_ranks(InitialRanks({1})) == parse_permutation("1"));
  CHECK(from_initial_ranks(InitialRanks({1, 1, 3, 3, 1, 4, 7, 5})) ==
        parse_permutation("3,2,7,6,1,4,8,5"));
  CHECK(from_initial_ranks(InitialRanks({1, 2, 1})) == parse_permutation("2,3,1"));
  CHECK_THROWS_AS(InitialRanks({1, 3}), std::invalid_argument);  // rank beyond position
  CHECK_THROWS_AS(InitialRanks({2}), std::invalid_argument);
}

TEST_CASE("malformed words are rejected") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
}

TEST_CASE("restriction ranks the prefix") {
  const Permutation p = parse_permutation("3,2,7,6,1,4,8,5");
  CHECK(restrict(p, 8) == p);
  CHECK(restrict(p, 4) == parse_permutation("2,1,4,3"));
  CHECK(restrict(parse_permutation("2,3,1"), 1) == parse_permutation("1"));
  CHECK_THROWS_AS(restrict(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(restrict(p, 9), std::invalid_argument);
}

TEST_CASE("restriction composes") {
  for (Value n = 1; n <= 6; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const Permutation p(word);
      for (Value m2 = 1; m2 <= n; ++m2)
        for (Value m = 1; m <= m2; ++m)
          CHECK(restrict(p, m) == restrict(restrict(p, m2), m));
    });
}

TEST_CASE("classical projections") {
  CHECK(classical_project(parse_permutation("3,1,2"), ProjectionMode::kOneRowDelete) ==
        parse_permutation("1,2"));
  CHECK(classical_project(parse_permutation("2,3,1"), ProjectionMode::kCycleDelete) ==
        parse_permutation("2,1"));
  CHECK(classical_project(parse_permutation("1,2"), ProjectionMode::kOneRowDelete) ==
        parse_permutation("1"));
  CHECK_THROWS_AS(classical_project(parse_permutation("1"), ProjectionMode::kOneRowDelete),
                  std::invalid_argument);
}

TEST_CASE("hat bijection splits before proper lower records") {
  // (3,2,7,6,1,4,8,5)^ has cycles (3)(2,7,6)(1,4,8,5)
  const Permutation image = hat_bijection(parse_permutation("3,2,7,6,1,4,8,5"),
                                          HatDirection::kForward);
  CHECK(image == parse_permutation("4,7,3,8,1,2,6,5"));
  CHECK(hat_bijection(parse_permutation("1"), HatDirection::kForward) == parse_permutation("1"));
  CHECK(hat_bijection(parse_permutation("2,1"), HatDirection::kForward) ==
        parse_permutation("1,2"));
}

TEST_CASE("hat bijection round trips exhaustively") {
  for (Value n = 1; n <= 7; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const Permutation p(word);
      CHECK(hat_bijection(hat_bijection(p, HatDirection::kForward), HatDirection::kInverse) ==
            p);
      CHECK(hat_bijection(hat_bijection(p, HatDirection::kInverse), HatDirection::kForward) ==
            p);
    });
}

TEST_CASE("record folding") {
  CHECK(fold_records(parse_permutation("2,1")) == parse_permutation("1"));
  // (3,2,7,6,1,4,8,5) has l = u = 2; its image must have 3 proper lower records
  const Permutation image = fold_records(parse_permutation("3,2,7,6,1,4,8,5"));
  CHECK(extract_records(image).lower_count == 3);
  CHECK_THROWS_AS(fold_records(parse_permutation("1")), std::invalid_argument);
}

TEST_CASE("fold fibers over the 3-element group") {
  std::map<Permutation, Value> preimages;
  for_each_word(3, [&](const std::vector<Value>& word) {
    preimages[fold_records(Permutation(word))] += 1;
  });
  Value total = 0;
  for (const auto& [image, count] : preimages) {
    const Value r = extract_records(image).lower_count + 1;
    CHECK(count == (Value(1) << r));
    total += count;
  }
  CHECK(total == 6);
}

TEST_CASE("flip symmetry: inversion preserves the lower-record count") {
  for (Value n = 1; n <= 7; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const Permutation p(word);
      CHECK(extract_records(p).lower_count == extract_records(inverse(p)).lower_count);
    });
}

TEST_CASE("order reversal swaps the record types") {
  for (Value n = 1; n <= 7; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const Permutation p(word);
      const RecordProfile direct = extract_records(p);
      const RecordProfile flipped = extract_records(complement(p));
      CHECK(direct.lower_count == flipped.upper_count);
      CHECK(direct.upper_count == flipped.lower_count);
    });
}

TEST_CASE("word formatting round trips") {
  const Permutation p = parse_permutation("3,2,7,6,1,4,8,5");
  CHECK(parse_permutation(format_permutation(p)) == p);
}
