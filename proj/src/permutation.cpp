#include "recperm/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace recperm {

Permutation::Permutation(std::vector<Value> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("permutation must be nonempty");
  const Value n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Value v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("word is not a bijection of {1,...,n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(Value n) {
  std::vector<Value> w(static_cast<std::size_t>(n));
  for (Value j = 1; j <= n; ++j) w[static_cast<std::size_t>(j - 1)] = j;
  return Permutation(std::move(w));
}

InitialRanks::InitialRanks(std::vector<Value> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw std::invalid_argument("initial ranks must be nonempty");
  for (Value j = 1; j <= size(); ++j) {
    Value r = at(j);
    if (r < 1 || r > j)
      throw std::invalid_argument("initial rank out of range [1,j] at position " +
                                  std::to_string(j));
  }
}

InitialRanks to_initial_ranks(const Permutation& p) {
  const Value n = p.size();
  std::vector<Value> ranks(static_cast<std::size_t>(n));
  for (Value j = 1; j <= n; ++j) {
    Value r = 0;
    for (Value k = 1; k <= j; ++k)
      if (p.at(k) <= p.at(j)) ++r;
    ranks[static_cast<std::size_t>(j - 1)] = r;
  }
  return InitialRanks(std::move(ranks));
}

Permutation from_initial_ranks(const InitialRanks& r) {
  const Value n = r.size();
  std::vector<Value> word;
  word.reserve(static_cast<std::size_t>(n));
  for (Value j = 1; j <= n; ++j) {
    const Value rank = r.at(j);
    for (Value& w : word)
      if (w >= rank) ++w;
    word.push_back(rank);
  }
  return Permutation(std::move(word));
}

Permutation rank_word(const std::vector<Value>& xs) {
  const Value n = static_cast<Value>(xs.size());
  std::vector<Value> ranks(static_cast<std::size_t>(n));
  for (Value j = 0; j < n; ++j) {
    Value r = 0;
    for (Value k = 0; k < n; ++k)
      if (xs[static_cast<std::size_t>(k)] <= xs[static_cast<std::size_t>(j)]) ++r;
    ranks[static_cast<std::size_t>(j)] = r;
  }
  return Permutation(std::move(ranks));
}

Permutation restrict(const Permutation& p, Value m) {
  if (m < 1 || m > p.size())
    throw std::invalid_argument("restriction size out of range");
  std::vector<Value> prefix(p.word().begin(), p.word().begin() + m);
  return rank_word(prefix);
}

Permutation inverse(const Permutation& p) {
  const Value n = p.size();
  std::vector<Value> w(static_cast<std::size_t>(n));
  for (Value j = 1; j <= n; ++j) w[static_cast<std::size_t>(p.at(j) - 1)] = j;
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const Value n = p.size();
  std::vector<Value> w;
  w.reserve(static_cast<std::size_t>(n));
  for (Value v : p.word()) w.push_back(n + 1 - v);
  return Permutation(std::move(w));
}

Permutation classical_project(const Permutation& p, ProjectionMode mode) {
  const Value n = p.size();
  if (n < 2) throw std::invalid_argument("projection needs n >= 2");
  if (mode == ProjectionMode::kOneRowDelete) {
    std::vector<Value> w;
    w.reserve(static_cast<std::size_t>(n - 1));
    for (Value v : p.word())
      if (v != n) w.push_back(v);
    return Permutation(std::move(w));
  }
  // Cycle delete: as a mapping, route the predecessor of n to the successor.
  std::vector<Value> w;
  w.reserve(static_cast<std::size_t>(n - 1));
  const Value succ = p.at(n);
  for (Value j = 1; j <= n - 1; ++j) {
    Value img = p.at(j);
    if (img == n) img = succ;
    w.push_back(img);
  }
  return Permutation(std::move(w));
}

Permutation hat_bijection(const Permutation& p, HatDirection direction) {
  const Value n = p.size();
  if (direction == HatDirection::kForward) {
    // Split before each proper lower record; each segment is a cycle.
    std::vector<Value> w(static_cast<std::size_t>(n));
    Value start = 1;
    Value running_min = p.at(1);
    for (Value j = 2; j <= n + 1; ++j) {
      const bool cut = (j == n + 1) || p.at(j) < running_min;
      if (cut) {
        for (Value k = start; k < j - 1; ++k)
          w[static_cast<std::size_t>(p.at(k) - 1)] = p.at(k + 1);
        w[static_cast<std::size_t>(p.at(j - 1) - 1)] = p.at(start);
        start = j;
      }
      if (j <= n) running_min = std::min(running_min, p.at(j));
    }
    return Permutation(std::move(w));
  }
  // Inverse: write each cycle from its minimum, order cycles by decreasing
  // minima, concatenate.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Value>> cycles;
  for (Value v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v - 1)]) continue;
    std::vector<Value> cyc;
    Value cur = v;
    do {
      seen[static_cast<std::size_t>(cur - 1)] = true;
      cyc.push_back(cur);
      cur = p.at(cur);
    } while (cur != v);
    cycles.push_back(std::move(cyc));  // leader is the cycle minimum
  }
  std::vector<Value> w;
  w.reserve(static_cast<std::size_t>(n));
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return Permutation(std::move(w));
}

Permutation fold_records(const Permutation& p) {
  const Value n = p.size();
  if (n < 2) throw std::invalid_argument("fold_records needs n >= 2");
  const InitialRanks r = to_initial_ranks(p);
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (Value j = 2; j <= n; ++j) {
    const Value rank = r.at(j);
    out.push_back(rank < j ? rank : 1);  // upper records fold onto rank 1
  }
  return from_initial_ranks(InitialRanks(std::move(out)));
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  for (Value j = 1; j <= p.size(); ++j) {
    if (j > 1) os << ',';
    os << p.at(j);
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  std::vector<Value> w;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in permutation word");
    w.push_back(std::stoll(tok));
  }
  return Permutation(std::move(w));
}

}  // namespace recperm
