#include <doctest.h>

#include <map>

#include "recperm/counts.hpp"
#include "recperm/enumerate.hpp"
#include "recperm/records.hpp"

using namespace recperm;

TEST_CASE("two-sided record counts at small sizes") {
  CHECK(record_stirling(1, 0, 0) == BigCount(1));
  // the full table over the 3-element group
  CHECK(record_stirling(3, 0, 1) == BigCount(1));
  CHECK(record_stirling(3, 0, 2) == BigCount(1));
  CHECK(record_stirling(3, 1, 0) == BigCount(1));
  CHECK(record_stirling(3, 1, 1) == BigCount(2));
  CHECK(record_stirling(3, 2, 0) == BigCount(1));
  CHECK(record_stirling(3, 0, 0).is_zero());
  CHECK(record_stirling(4, 1, 1) == BigCount(6));
  CHECK(record_stirling(4, 1, 1) == record_stirling_via_identity(4, 1, 1));
}

TEST_CASE("counts vanish outside the support") {
  CHECK(record_stirling(5, 3, 2).is_zero());   // l + u > n - 1
  CHECK(record_stirling(2, 0, 0).is_zero());
  CHECK(record_stirling(1, 1, 0).is_zero());
}

TEST_CASE("signless Stirling numbers") {
  CHECK(stirling1(0, 0) == BigCount(1));
  CHECK(stirling1(3, 2) == BigCount(3));
  CHECK(stirling1(4, 1) == BigCount(6));
  CHECK(stirling1(4, 2) == BigCount(11));
  CHECK(stirling1(5, 5) == BigCount(1));
}

TEST_CASE("generating function identity") {
  CHECK(check_generating_function(1, TwoParam(Rational(7), Rational(9))));
  CHECK(check_generating_function(3, TwoParam(Rational(1), Rational(1))));
  CHECK(check_generating_function(3, TwoParam(Rational(2), Rational(3))));
  // n = 3, theta = 2, zeta = 3: both sides equal 30
  Rational lhs(0);
  for (Value l = 0; l <= 2; ++l)
    for (Value u = 0; l + u <= 2; ++u)
      lhs += Rational(BigInt(record_stirling(3, l, u))) * pow(Rational(2), l) *
             pow(Rational(3), u);
  CHECK(lhs == Rational(30));
}

TEST_CASE("extension counts degenerate to record counts") {
  CHECK(extension_count(3, 1, 1, 3, 1, 1) == record_stirling(3, 1, 1));
  CHECK(extension_count(3, 1, 1, 3, 2, 0).is_zero());
  CHECK(extension_count(1, 0, 0, 6, 2, 1) == record_stirling(6, 2, 1));
}

TEST_CASE("extension counts against brute force") {
  // count permutations of [n2] with counts (l2,u2) whose prefix has (l,u)
  for (Value n = 2; n <= 4; ++n)
    for (Value n2 = n; n2 <= 7; ++n2) {
      std::map<std::array<Value, 4>, std::uint64_t> brute;
      for_each_word(n2, [&](const std::vector<Value>& word) {
        const Permutation p(word);
        const RecordProfile outer = extract_records(p);
        const RecordProfile inner = extract_records(restrict(p, n));
        brute[{inner.lower_count, inner.upper_count, outer.lower_count,
               outer.upper_count}] += 1;
      });
      for (Value l = 0; l <= n - 1; ++l)
        for (Value u = 0; l + u <= n - 1; ++u)
          for (Value l2 = l; l2 <= n2 - 1; ++l2)
            for (Value u2 = u; l2 + u2 <= n2 - 1; ++u2) {
              auto it = brute.find({l, u, l2, u2});
              const BigCount expected =
                  it == brute.end() ? BigCount() : BigCount(it->second);
              CHECK(extension_count(n, l, u, n2, l2, u2) == expected);
            }
    }
}

TEST_CASE("extension count guards its caps") {
  CHECK_THROWS_AS(extension_count(3, 1, 1, 61, 2, 2), ResourceError);
  CHECK_THROWS_AS(extension_count(5, 1, 1, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("extension counts stay exact at depth") {
  // sanity at the cap: the total over targets is (n2)!/n! times the source class
  const BigCount total = extension_count(1, 0, 0, 20, 3, 4);
  CHECK(!total.is_zero());
  CHECK(extension_count(1, 0, 0, 20, 0, 0).is_zero());
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == BigCount(120));
  CHECK(binomial(3, 5).is_zero());
  CHECK(factorial(10) == BigCount(3628800));
}
