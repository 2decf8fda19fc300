#include "recperm/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "recperm/counts.hpp"
#include "recperm/enumerate.hpp"
#include "recperm/poset.hpp"
#include "recperm/samplers.hpp"

namespace recperm {

Rational DistTable::total() const {
  Rational sum(0);
  for (const auto& [p, prob] : probabilities) sum += prob;
  return sum;
}

Rational DistTable::at(const Permutation& p) const {
  auto it = probabilities.find(p);
  return it == probabilities.end() ? Rational(0) : it->second;
}

Rational limit_probability(const Permutation& p, const LimitFamily& family) {
  const Value n = p.size();
  if (n == 1) return Rational(1);
  const Rational& param = family.parameter;
  switch (family.kind) {
    case LimitKind::kBernoulliPyramid: {
      const RecordProfile profile = extract_records(p);
      if (profile.lower_count + profile.upper_count != n - 1) return Rational(0);
      return pow(param, profile.lower_count) * pow(Rational(1) - param, profile.upper_count);
    }
    case LimitKind::kSingleRecord: {
      const Rational middle = Rational(1) / Rational(BigInt(factorial(n - 2)));
      if (p.at(1) == 1 && p.at(2) == n) return param * middle;
      if (p.at(1) == n && p.at(2) == 1) return (Rational(1) - param) * middle;
      return Rational(0);
    }
    case LimitKind::kThetaZero: {
      if (p.at(1) != 1) return Rational(0);
      std::vector<Value> rest(p.word().begin() + 1, p.word().end());
      return perm_probability(rank_word(rest), TwoParam(Rational(1), param));
    }
    case LimitKind::kZetaZero: {
      if (p.at(1) != n) return Rational(0);
      std::vector<Value> rest(p.word().begin() + 1, p.word().end());
      return perm_probability(rank_word(rest), TwoParam(param, Rational(1)));
    }
  }
  throw std::logic_error("unknown limit family");
}

Rational fixed_shape_probability(const Permutation& p, const RationalShape& shape) {
  shape.validate();
  if (!shape.has(0)) throw std::invalid_argument("shape needs a center entry");
  const Value n = p.size();
  const RecordProfile profile = extract_records(p);
  // map record value -> signed record index
  std::map<Value, Value> record_index;
  for (Value k = -profile.lower_count; k <= profile.upper_count; ++k)
    record_index[profile.value_at(k)] = k;
  Rational prob(1);
  Value lo = 0, hi = 0;  // shape indices consumed so far
  std::map<Value, Value> middles;
  for (Value j = 2; j <= n; ++j) {
    const Value v = p.at(j);
    auto it = record_index.find(v);
    if (it != record_index.end() && it->second > 0 && it->second == hi + 1) {
      const Rational factor = Rational(1) - shape.rho_at(hi);
      if (factor.is_zero()) return Rational(0);
      if (!shape.has(hi + 1))
        throw TruncationError("shape exhausted above while mass remains");
      prob *= factor;
      ++hi;
    } else if (it != record_index.end() && it->second < 0 && it->second == lo - 1) {
      const Rational factor = shape.rho_at(lo);
      if (factor.is_zero()) return Rational(0);
      if (!shape.has(lo - 1))
        throw TruncationError("shape exhausted below while mass remains");
      prob *= factor;
      --lo;
    } else {
      // middle element of block k: it must land in its slot among the
      // middles already in the gap, so the i-th one carries gap/i
      Value k;
      if (v < profile.value_at(0)) {
        k = -1;
        while (v < profile.value_at(k)) --k;
      } else {
        k = 1;
        while (v > profile.value_at(k)) ++k;
      }
      const Rational gap = k > 0 ? shape.rho_at(k) - shape.rho_at(k - 1)
                                 : shape.rho_at(k + 1) - shape.rho_at(k);
      if (gap.is_zero()) return Rational(0);
      const Value i = ++middles[k];
      prob *= gap / Rational(i);
    }
  }
  return prob;
}

DistTable pushforward_table(Value n, const Law& law) {
  if (n < 1) throw std::invalid_argument("pushforward needs n >= 1");
  if (n > kEnumerationCap)
    throw ResourceError("pushforward capped at n = " + std::to_string(kEnumerationCap));
  DistTable out;
  out.n = n;

  if (const auto* window = std::get_if<IntegerWindowLaw>(&law)) {
    const Value d = window->theta + window->zeta - 2;
    if (window->theta < 1 || window->zeta < 1)
      throw std::invalid_argument("window projection needs integer theta, zeta >= 1");
    if (n + d > kScanCap) throw ResourceError("window projection source exceeds the scan cap");
    const Rational mass = Rational(1) / Rational(BigInt(factorial(n + d)));
    for_each_word(n + d, [&](const std::vector<Value>& word) {
      Permutation image = window_projection(Permutation(word), window->theta, window->zeta, n);
      out.probabilities[image] += mass;
    });
    return out;
  }

  if (const auto* two = std::get_if<TwoParamLaw>(&law)) {
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      out.probabilities[p] = perm_probability(p, two->params);
    });
    return out;
  }
  if (const auto* gen = std::get_if<GeneralLaw>(&law)) {
    validate_principal(gen->params);
    // constant on record-profile classes: evaluate the closed form per class
    std::map<CenteredComposition, Rational> class_prob;
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      CenteredComposition c = profile_to_composition(extract_records(p));
      auto it = class_prob.find(c);
      if (it == class_prob.end())
        it = class_prob.emplace(c, general_class_probability(c, gen->params)).first;
      out.probabilities[p] = it->second;
    });
    return out;
  }
  if (const auto* limit = std::get_if<LimitLaw>(&law)) {
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      Rational prob = limit_probability(p, limit->family);
      if (!prob.is_zero()) out.probabilities[p] = prob;
    });
    return out;
  }
  const auto& shape = std::get<FixedShapeLaw>(law).shape;
  for_each_word(n, [&](const std::vector<Value>& word) {
    Permutation p(word);
    Rational prob = fixed_shape_probability(p, shape);
    if (!prob.is_zero()) out.probabilities[p] = prob;
  });
  return out;
}

DistTable restrict_pushforward(const DistTable& table, Value m) {
  DistTable out;
  out.n = m;
  for (const auto& [p, prob] : table.probabilities)
    out.probabilities[restrict(p, m)] += prob;
  return out;
}

std::string dist_table_to_json(const DistTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [p, prob] : table.probabilities) {
    entries.push_back({{"perm", format_permutation(p)}, {"p", prob.to_fraction_string()}});
  }
  nlohmann::json j;
  j["n"] = table.n;
  j["entries"] = entries;
  return j.dump();
}

std::string dist_table_to_csv(const DistTable& table) {
  std::ostringstream os;
  os << "perm,p\n";
  for (const auto& [p, prob] : table.probabilities)
    os << '"' << format_permutation(p) << "\"," << prob.to_fraction_string() << '\n';
  return os.str();
}

Rational WTable::at(Value n, Value l, Value u) const {
  auto it = w.find({n, l, u});
  return it == w.end() ? Rational(0) : it->second;
}

WTable w_table(const TwoParam& params, Value n_max) {
  if (n_max < 1) throw std::invalid_argument("w_table needs n_max >= 1");
  WTable out;
  out.n_max = n_max;
  for (Value n = 1; n <= n_max; ++n) {
    const Rational denom = rising_factorial(params.theta + params.zeta, n - 1);
    for (Value l = 0; l <= n - 1; ++l)
      for (Value u = 0; l + u <= n - 1; ++u) {
        BigCount c = record_stirling(n, l, u);
        if (c.is_zero()) continue;
        out.w[{n, l, u}] =
            Rational(BigInt(c)) * pow(params.theta, l) * pow(params.zeta, u) / denom;
      }
  }
  return out;
}

WTable w_table(const GeneralParams& params, Value n_max) {
  if (n_max < 1) throw std::invalid_argument("w_table needs n_max >= 1");
  validate_principal(params);
  WTable out;
  out.n_max = n_max;
  for (Value n = 1; n <= n_max; ++n) {
    for (const CenteredComposition& c : enumerate_compositions(n)) {
      const Rational mass =
          Rational(BigInt(d_count(c))) * general_class_probability(c, params);
      auto key = std::make_tuple(n, c.lower_count, c.upper_count());
      auto it = out.w.find(key);
      if (it == out.w.end())
        out.w.emplace(key, mass);
      else
        it->second += mass;
    }
  }
  return out;
}

bool check_dual(const WTable& table) {
  if (table.at(1, 0, 0) != Rational(1)) return false;
  for (Value n = 1; n < table.n_max; ++n)
    for (Value l = 0; l <= n - 1; ++l)
      for (Value u = 0; l + u <= n - 1; ++u) {
        BigCount c = record_stirling(n, l, u);
        if (c.is_zero()) continue;
        const Rational q = table.at(n, l, u) / Rational(BigInt(c));
        Rational rhs(0);
        BigCount c_low = record_stirling(n + 1, l + 1, u);
        BigCount c_up = record_stirling(n + 1, l, u + 1);
        BigCount c_mid = record_stirling(n + 1, l, u);
        if (!c_low.is_zero()) rhs += table.at(n + 1, l + 1, u) / Rational(BigInt(c_low));
        if (!c_up.is_zero()) rhs += table.at(n + 1, l, u + 1) / Rational(BigInt(c_up));
        if (!c_mid.is_zero())
          rhs += Rational(n - 1) * table.at(n + 1, l, u) / Rational(BigInt(c_mid));
        if (q != rhs) return false;
      }
  return true;
}

std::string w_table_to_json(const WTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, prob] : table.w) {
    const auto& [n, l, u] = key;
    entries.push_back({{"n", n}, {"l", l}, {"u", u}, {"w", prob.to_fraction_string()}});
  }
  nlohmann::json j;
  j["n_max"] = table.n_max;
  j["entries"] = entries;
  return j.dump();
}

std::string w_table_to_csv(const WTable& table) {
  std::ostringstream os;
  os << "n,l,u,w\n";
  for (const auto& [key, prob] : table.w) {
    const auto& [n, l, u] = key;
    os << n << ',' << l << ',' << u << ',' << prob.to_fraction_string() << '\n';
  }
  return os.str();
}

}  // namespace recperm
