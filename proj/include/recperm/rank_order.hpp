#pragma once

#include <vector>

#include "recperm/permutation.hpp"

namespace recperm {

enum class Tiebreak { kLow, kHigh };

/// Initial ranks of the order induced on a real sequence that may repeat
/// values only at running maxima or minima. The rules: smaller values rank
/// lower; the earlier of two equal running maxima ranks lower; the later of
/// two equal running minima ranks lower.
///
/// When the sequence starts with a constant run of length m > 1 the two
/// tie rules collide, and prefix_tiebreak must supply one entry per position
/// j = 2..m choosing rank 1 (kLow) or rank j (kHigh).
///
/// Throws std::invalid_argument when a repeated value is neither a running
/// maximum nor a running minimum, or when the tiebreak list has the wrong
/// length for the initial constant run.
InitialRanks rank_order(const std::vector<double>& xs,
                        const std::vector<Tiebreak>& prefix_tiebreak = {});

}  // namespace recperm
