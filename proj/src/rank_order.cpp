#include "recperm/rank_order.hpp"

#include <stdexcept>

namespace recperm {

InitialRanks rank_order(const std::vector<double>& xs,
                        const std::vector<Tiebreak>& prefix_tiebreak) {
  const Value n = static_cast<Value>(xs.size());
  if (n == 0) throw std::invalid_argument("rank_order needs a nonempty sequence");

  // Length of the initial constant run.
  Value run = 1;
  while (run < n && xs[static_cast<std::size_t>(run)] == xs[0]) ++run;
  const Value needed = run > 1 ? run - 1 : 0;
  if (static_cast<Value>(prefix_tiebreak.size()) != needed)
    throw std::invalid_argument("prefix tiebreak list must have " + std::to_string(needed) +
                                " entries for the initial constant run");

  std::vector<Value> ranks;
  ranks.reserve(static_cast<std::size_t>(n));
  ranks.push_back(1);
  for (Value j = 2; j <= n; ++j) {
    const double x = xs[static_cast<std::size_t>(j - 1)];
    if (j <= run) {
      ranks.push_back(prefix_tiebreak[static_cast<std::size_t>(j - 2)] == Tiebreak::kLow ? 1 : j);
      continue;
    }
    Value below = 0, equal = 0;
    for (Value k = 1; k < j; ++k) {
      const double y = xs[static_cast<std::size_t>(k - 1)];
      if (y < x) ++below;
      else if (y == x) ++equal;
    }
    if (equal == 0) {
      ranks.push_back(below + 1);
    } else if (below + equal == j - 1) {
      ranks.push_back(j);  // repeated running maximum: earlier copy ranks lower
    } else if (below == 0) {
      ranks.push_back(1);  // repeated running minimum: later copy ranks lower
    } else {
      throw std::invalid_argument("repeated value at position " + std::to_string(j) +
                                  " is neither a running maximum nor a running minimum");
    }
  }
  return InitialRanks(std::move(ranks));
}

}  // namespace recperm
