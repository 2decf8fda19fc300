#include "recperm/records.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace recperm {

void RecordProfile::validate() const {
  const Value count = static_cast<Value>(values.size());
  if (count != lower_count + upper_count + 1 || lower_count < 0 || upper_count < 0)
    throw std::invalid_argument("record counts inconsistent with value list");
  if (n < 1) throw std::invalid_argument("profile needs n >= 1");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw std::invalid_argument("record values must be strictly increasing");
  if (value_at(-lower_count) != 1) throw std::invalid_argument("lowest record must be 1");
  if (value_at(upper_count) != n) throw std::invalid_argument("highest record must be n");
  if (count < std::min<Value>(2, n) || count > n)
    throw std::invalid_argument("record count outside [min(2,n), n]");
  if (!times.empty()) {
    if (times.size() != values.size())
      throw std::invalid_argument("times must align with values");
    if (time_at(0) != 1) throw std::invalid_argument("center time must be 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Value t : times) {
      if (t < 1 || t > n || seen[static_cast<std::size_t>(t - 1)])
        throw std::invalid_argument("record times must be distinct positions");
      seen[static_cast<std::size_t>(t - 1)] = true;
    }
    for (Value k = 2; k <= upper_count; ++k)
      if (time_at(k) <= time_at(k - 1))
        throw std::invalid_argument("upper record times must increase");
    for (Value k = 2; k <= lower_count; ++k)
      if (time_at(-k) <= time_at(-(k - 1)))
        throw std::invalid_argument("lower record times must increase");
  }
}

Value CenteredComposition::degree() const {
  Value sum = 0;
  for (Value part : parts) sum += part;
  return sum;
}

Value CenteredComposition::tail_sum(Value k) const {
  Value sum = 0;
  if (k > 0) {
    for (Value i = k; i <= upper_count(); ++i) sum += part_at(i);
  } else {
    for (Value i = -lower_count; i <= k; ++i) sum += part_at(i);
  }
  return sum;
}

void CenteredComposition::validate() const {
  if (lower_count < 0 || lower_count >= static_cast<Value>(parts.size()))
    throw std::invalid_argument("center index out of range");
  if (part_at(0) != 1) throw std::invalid_argument("center part must be 1");
  for (Value part : parts)
    if (part < 1) throw std::invalid_argument("composition parts must be positive");
}

RecordProfile extract_records(const Permutation& p) {
  const Value n = p.size();
  std::vector<Value> lower_vals, lower_times, upper_vals, upper_times;
  Value running_min = p.at(1), running_max = p.at(1);
  for (Value j = 2; j <= n; ++j) {
    const Value v = p.at(j);
    if (v < running_min) {
      running_min = v;
      lower_vals.push_back(v);
      lower_times.push_back(j);
    } else if (v > running_max) {
      running_max = v;
      upper_vals.push_back(v);
      upper_times.push_back(j);
    }
  }
  RecordProfile out;
  out.n = n;
  out.lower_count = static_cast<Value>(lower_vals.size());
  out.upper_count = static_cast<Value>(upper_vals.size());
  // lower records were recorded in decreasing value order; flip to ascending
  out.values.assign(lower_vals.rbegin(), lower_vals.rend());
  out.values.push_back(p.at(1));
  out.values.insert(out.values.end(), upper_vals.begin(), upper_vals.end());
  out.times.assign(lower_times.rbegin(), lower_times.rend());
  out.times.push_back(1);
  out.times.insert(out.times.end(), upper_times.begin(), upper_times.end());
  return out;
}

CenteredComposition profile_to_composition(const RecordProfile& profile) {
  profile.validate();
  CenteredComposition out;
  out.lower_count = profile.lower_count;
  for (Value k = -profile.lower_count; k <= profile.upper_count; ++k) {
    if (k < 0)
      out.parts.push_back(profile.value_at(k + 1) - profile.value_at(k));
    else if (k == 0)
      out.parts.push_back(1);
    else
      out.parts.push_back(profile.value_at(k) - profile.value_at(k - 1));
  }
  return out;
}

RecordProfile composition_to_profile(const CenteredComposition& composition) {
  composition.validate();
  const Value l = composition.lower_count;
  const Value u = composition.upper_count();
  RecordProfile out;
  out.lower_count = l;
  out.upper_count = u;
  out.n = composition.degree();
  for (Value k = -l; k <= u; ++k) {
    Value r;
    if (k <= 0) {
      r = 1;
      for (Value i = -l; i < k; ++i) r += composition.part_at(i);
    } else {
      r = 0;
      for (Value i = -l; i <= k; ++i) r += composition.part_at(i);
    }
    out.values.push_back(r);
  }
  out.validate();
  return out;
}

OrderedPartition ordered_blocks(const Permutation& p) {
  const RecordProfile profile = extract_records(p);
  const Value n = p.size();
  OrderedPartition out;
  out.n = n;
  out.blocks[0] = {1};
  for (Value j = 2; j <= n; ++j) {
    const Value v = p.at(j);
    // Locate the block by value interval: [r_k, r_{k+1}) for k < 0,
    // (r_{k-1}, r_k] for k > 0.
    Value k = 0;
    if (v < profile.value_at(0)) {
      k = -1;
      while (v < profile.value_at(k)) --k;
    } else {
      k = 1;
      while (v > profile.value_at(k)) ++k;
    }
    out.blocks[k].push_back(j);
  }
  for (auto& [k, block] : out.blocks) std::sort(block.begin(), block.end());
  return out;
}

std::string format_profile(const RecordProfile& profile) {
  std::ostringstream os;
  for (Value k = -profile.lower_count; k <= profile.upper_count; ++k) {
    if (k > -profile.lower_count) os << ',';
    if (k == 0)
      os << '[' << profile.value_at(k) << ']';
    else
      os << profile.value_at(k);
  }
  return os.str();
}

RecordProfile parse_profile(const std::string& text) {
  RecordProfile out;
  std::istringstream is(text);
  std::string tok;
  Value center_index = -1;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in profile");
    if (tok.front() == '[' && tok.back() == ']') {
      if (center_index >= 0) throw std::invalid_argument("profile has two centers");
      center_index = static_cast<Value>(out.values.size());
      tok = tok.substr(1, tok.size() - 2);
    }
    out.values.push_back(std::stoll(tok));
  }
  if (center_index < 0) throw std::invalid_argument("profile has no [center]");
  out.lower_count = center_index;
  out.upper_count = static_cast<Value>(out.values.size()) - center_index - 1;
  out.n = out.values.back();
  out.validate();
  return out;
}

std::string format_composition(const CenteredComposition& composition) {
  std::ostringstream os;
  for (Value k = -composition.lower_count; k <= composition.upper_count(); ++k) {
    if (k > -composition.lower_count) os << ',';
    if (k == 0) os << '^';
    os << composition.part_at(k);
  }
  return os.str();
}

CenteredComposition parse_composition(const std::string& text) {
  CenteredComposition out;
  std::istringstream is(text);
  std::string tok;
  Value center_index = -1;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in composition");
    if (tok.front() == '^') {
      if (center_index >= 0) throw std::invalid_argument("composition has two centers");
      center_index = static_cast<Value>(out.parts.size());
      tok = tok.substr(1);
    }
    out.parts.push_back(std::stoll(tok));
  }
  if (center_index < 0) throw std::invalid_argument("composition has no ^center");
  out.lower_count = center_index;
  out.validate();
  return out;
}

}  // namespace recperm
