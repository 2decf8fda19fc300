#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "recperm/permutation.hpp"

namespace recperm {

/// Exhaustive enumeration over the symmetric group is capped here; exact
/// pushforward tables refuse larger n with a ResourceError.
inline constexpr Value kEnumerationCap = 10;
/// Hard ceiling for any full scan of words (identity cross-checks).
inline constexpr Value kScanCap = 12;

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Calls fn with every word of the symmetric group on [n] in lexicographic
/// order. fn receives the raw word; wrap in Permutation only when needed.
template <typename Fn>
void for_each_word(Value n, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > kScanCap) throw ResourceError("refusing to enumerate beyond n = 12");
  std::vector<Value> word(static_cast<std::size_t>(n));
  for (Value j = 1; j <= n; ++j) word[static_cast<std::size_t>(j - 1)] = j;
  do {
    fn(const_cast<const std::vector<Value>&>(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace recperm
