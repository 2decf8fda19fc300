#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recperm/permutation.hpp"

namespace recperm {

/// Two-sided record profile of a permutation: the increasing record values
/// r_{-l},...,r_0,...,r_u with the center distinguished, the record times
/// t_k, and the proper record counts (l, u).
///
/// Times are optional: a profile synthesized from a centered composition has
/// values only. When present, times[k+l] is the position of values[k+l].
struct RecordProfile {
  std::vector<Value> values;  // ascending; values[lower_count] is the center
  std::vector<Value> times;   // empty when unknown; aligned with values
  Value lower_count = 0;
  Value upper_count = 0;
  Value n = 0;

  Value value_at(Value k) const { return values[static_cast<std::size_t>(k + lower_count)]; }
  Value time_at(Value k) const { return times[static_cast<std::size_t>(k + lower_count)]; }
  bool has_times() const { return !times.empty(); }

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;

  bool operator==(const RecordProfile& o) const {
    return values == o.values && times == o.times && lower_count == o.lower_count &&
           upper_count == o.upper_count && n == o.n;
  }
};

/// Centered composition of n: positive parts with a distinguished center part
/// equal to 1; the differenced encoding of a record profile.
struct CenteredComposition {
  std::vector<Value> parts;  // parts[lower_count] is the center
  Value lower_count = 0;

  Value upper_count() const {
    return static_cast<Value>(parts.size()) - lower_count - 1;
  }
  Value part_at(Value k) const { return parts[static_cast<std::size_t>(k + lower_count)]; }
  Value degree() const;

  /// Tail sum toward the near end: parts k..u for k > 0, parts -l..k for k < 0.
  Value tail_sum(Value k) const;

  void validate() const;

  bool operator==(const CenteredComposition& o) const {
    return parts == o.parts && lower_count == o.lower_count;
  }
  bool operator<(const CenteredComposition& o) const {
    if (lower_count != o.lower_count) return lower_count < o.lower_count;
    return parts < o.parts;
  }
};

/// Ordered partition of [n] into blocks indexed by k, with A_0 = {1} and
/// min(A_k) equal to the k-th record time.
struct OrderedPartition {
  std::map<Value, std::vector<Value>> blocks;  // positions, sorted ascending
  Value n = 0;
};

RecordProfile extract_records(const Permutation& p);

CenteredComposition profile_to_composition(const RecordProfile& profile);
/// The resulting profile carries values and counts only (no times).
RecordProfile composition_to_profile(const CenteredComposition& composition);

OrderedPartition ordered_blocks(const Permutation& p);

/// "1,2,[3],7,8" with the center bracketed.
std::string format_profile(const RecordProfile& profile);
RecordProfile parse_profile(const std::string& text);

/// "3,1,^1,3,2" with the center part prefixed by a caret.
std::string format_composition(const CenteredComposition& composition);
CenteredComposition parse_composition(const std::string& text);

}  // namespace recperm
