#include <doctest.h>

#include "recperm/enumerate.hpp"
#include "recperm/rank_order.hpp"
#include "recperm/records.hpp"

using namespace recperm;

TEST_CASE("record extraction on the worked example") {
  const RecordProfile p = extract_records(parse_permutation("3,2,7,6,1,4,8,5"));
  CHECK(p.values == std::vector<Value>{1, 2, 3, 7, 8});
  CHECK(p.lower_count == 2);
  CHECK(p.upper_count == 2);
  CHECK(p.value_at(0) == 3);
  CHECK(p.time_at(0) == 1);
  CHECK(format_profile(p) == "1,2,[3],7,8");
}

TEST_CASE("record extraction edge cases") {
  const RecordProfile single = extract_records(parse_permutation("1"));
  CHECK(single.values == std::vector<Value>{1});
  CHECK(single.lower_count == 0);
  CHECK(single.upper_count == 0);

  const RecordProfile p = extract_records(parse_permutation("2,3,1"));
  CHECK(format_profile(p) == "1,[2],3");
  CHECK(p.time_at(0) == 1);
  CHECK(p.time_at(1) == 2);
  CHECK(p.time_at(-1) == 3);
}

TEST_CASE("profiles validate their invariants") {
  RecordProfile p = extract_records(parse_permutation("2,3,1"));
  CHECK_NOTHROW(p.validate());
  p.values = {2, 3, 4};  // lowest record must be 1
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("profile to composition on the worked examples") {
  const RecordProfile p = extract_records(parse_permutation("3,2,7,6,1,4,8,5"));
  CHECK(format_composition(profile_to_composition(p)) == "1,1,^1,4,1");

  const CenteredComposition tiny = parse_composition("^1");
  const RecordProfile back = composition_to_profile(tiny);
  CHECK(back.values == std::vector<Value>{1});
  CHECK(back.n == 1);

  const CenteredComposition c = parse_composition("3,1,^1,3,2");
  const RecordProfile profile = composition_to_profile(c);
  CHECK(format_profile(profile) == "1,4,[5],8,10");
  CHECK(profile.n == 10);
  CHECK(profile_to_composition(profile) == c);
}

TEST_CASE("composition parsing and validation") {
  CHECK_THROWS_AS(parse_composition("3,1,1,3,2"), std::invalid_argument);   // no center
  CHECK_THROWS_AS(parse_composition("3,^2,1"), std::invalid_argument);      // center must be 1
  CHECK_THROWS_AS(parse_composition("0,^1"), std::invalid_argument);        // positive parts
  const CenteredComposition c = parse_composition("3,1,^1,3,2");
  CHECK(c.degree() == 10);
  CHECK(c.tail_sum(1) == 5);
  CHECK(c.tail_sum(2) == 2);
  CHECK(c.tail_sum(-1) == 4);
  CHECK(c.tail_sum(-2) == 3);
}

TEST_CASE("ordered blocks on the worked examples") {
  const OrderedPartition trivial = ordered_blocks(parse_permutation("1"));
  CHECK(trivial.blocks.size() == 1);
  CHECK(trivial.blocks.at(0) == std::vector<Value>{1});

  const OrderedPartition p = ordered_blocks(parse_permutation("2,3,1"));
  CHECK(p.blocks.at(0) == std::vector<Value>{1});
  CHECK(p.blocks.at(1) == std::vector<Value>{2});
  CHECK(p.blocks.at(-1) == std::vector<Value>{3});
}

TEST_CASE("block sizes equal the composition parts, exhaustively") {
  for (Value n = 1; n <= 7; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const Permutation p(word);
      const CenteredComposition c = profile_to_composition(extract_records(p));
      const OrderedPartition blocks = ordered_blocks(p);
      CHECK(static_cast<Value>(blocks.blocks.size()) ==
            c.lower_count + c.upper_count() + 1);
      for (const auto& [k, block] : blocks.blocks) {
        CHECK(static_cast<Value>(block.size()) == c.part_at(k));
        // the block minimum is the record time
        const RecordProfile profile = extract_records(p);
        CHECK(block.front() == profile.time_at(k));
      }
    });
}

TEST_CASE("ranking with repetitions follows the three rules") {
  CHECK(rank_order({0.5, 0.9, 0.1}).ranks() == std::vector<Value>{1, 2, 1});
  CHECK(rank_order({0.3, 0.3, 0.7}, {Tiebreak::kLow}).ranks() ==
        std::vector<Value>{1, 1, 3});
  CHECK(rank_order({0.5, 0.5, 0.5, 0.5}, {Tiebreak::kLow, Tiebreak::kLow, Tiebreak::kLow})
            .ranks() == std::vector<Value>{1, 1, 1, 1});
  // repeated running maximum: the earlier copy ranks lower
  CHECK(rank_order({0.5, 0.3, 0.5}).ranks() == std::vector<Value>{1, 1, 3});
  // repeated running minimum: the later copy ranks lower
  CHECK(rank_order({0.5, 0.7, 0.5}).ranks() == std::vector<Value>{1, 2, 1});
}

TEST_CASE("ranking rejects bad repetitions and missing tiebreaks") {
  CHECK_THROWS_AS(rank_order({0.3, 0.5, 0.7, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(rank_order({0.3, 0.3, 0.7}), std::invalid_argument);  // missing tiebreak
  CHECK_THROWS_AS(rank_order({0.3, 0.5}, {Tiebreak::kLow}), std::invalid_argument);
  CHECK_THROWS_AS(rank_order({}), std::invalid_argument);
}

TEST_CASE("profile parsing") {
  const RecordProfile p = parse_profile("1,2,[3],7,8");
  CHECK(p.lower_count == 2);
  CHECK(p.upper_count == 2);
  CHECK(p.n == 8);
  CHECK_THROWS_AS(parse_profile("1,2,3"), std::invalid_argument);  // no center
}
