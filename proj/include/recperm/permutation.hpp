#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recperm {

using Value = std::int64_t;

/// A permutation of [n] in one-row notation. Immutable after construction;
/// the constructor validates that the word is a bijection of {1,...,n}.
class Permutation {
 public:
  explicit Permutation(std::vector<Value> word);

  Value size() const { return static_cast<Value>(word_.size()); }
  /// Entry at 1-based position j.
  Value at(Value j) const { return word_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<Value>& word() const { return word_; }

  static Permutation identity(Value n);

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

 private:
  std::vector<Value> word_;
};

/// Initial-rank encoding (i_1,...,i_n) of a permutation: i_j is the rank of
/// the j-th entry among the first j entries, so 1 <= i_j <= j and i_1 = 1.
/// Rank 1 marks a lower record, rank j an upper record.
class InitialRanks {
 public:
  explicit InitialRanks(std::vector<Value> ranks);

  Value size() const { return static_cast<Value>(ranks_.size()); }
  Value at(Value j) const { return ranks_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<Value>& ranks() const { return ranks_; }

  bool operator==(const InitialRanks& o) const { return ranks_ == o.ranks_; }
  bool operator!=(const InitialRanks& o) const { return ranks_ != o.ranks_; }

 private:
  std::vector<Value> ranks_;
};

/// i_j = #{k <= j : word_k <= word_j}.
InitialRanks to_initial_ranks(const Permutation& p);
/// Inverse of to_initial_ranks.
Permutation from_initial_ranks(const InitialRanks& r);

/// Ranking permutation of an arbitrary sequence of distinct values.
Permutation rank_word(const std::vector<Value>& xs);

/// Ranking permutation of the length-m prefix; the projection that restricts
/// the order on [n] to [m].
Permutation restrict(const Permutation& p, Value m);

Permutation inverse(const Permutation& p);

/// Order reversal v -> n+1-v; swaps the two record types.
Permutation complement(const Permutation& p);

enum class ProjectionMode {
  kOneRowDelete,  // delete the entry n from the one-row word
  kCycleDelete,   // delete n from its cycle, splicing predecessor to successor
};

Permutation classical_project(const Permutation& p, ProjectionMode mode);

enum class HatDirection { kForward, kInverse };

/// Forward: reads the one-row word, split before each proper lower record, as
/// a cycle decomposition and returns the resulting mapping. Inverse: writes
/// each cycle from its minimum, orders cycles by decreasing minima, and
/// concatenates.
Permutation hat_bijection(const Permutation& p, HatDirection direction);

/// Sends an n-permutation to the (n-1)-permutation whose initial ranks are
/// i'_{j-1} = i_j when i_j < j and 1 when i_j = j, so every proper record of
/// the source becomes a lower record of the image. Fibers over an image with
/// r lower records (counting the improper one) have exactly 2^r members.
Permutation fold_records(const Permutation& p);

/// Comma-separated word, e.g. "3,2,7,6,1,4,8,5".
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& text);

}  // namespace recperm
