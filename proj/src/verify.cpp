#include "recperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "recperm/counts.hpp"
#include "recperm/enumerate.hpp"
#include "recperm/pe.hpp"
#include "recperm/poset.hpp"
#include "recperm/rank_order.hpp"
#include "recperm/samplers.hpp"

namespace recperm {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << name << ": " << (pass() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  nlohmann::json j;
  j["suite"] = name;
  j["pass"] = pass();
  j["checks"] = checks_json;
  return j.dump();
}

// ---------------------------------------------------------------------------
// exact checks

bool check_conditional_uniformity(const DistTable& table, Statistic stat,
                                  std::string* witness) {
  std::map<std::vector<Value>, Rational> fiber_value;
  for (const auto& [p, prob] : table.probabilities) {
    const RecordProfile profile = extract_records(p);
    std::vector<Value> key;
    switch (stat) {
      case Statistic::kRec:
        // the value list alone does not locate the center
        key = profile.values;
        key.push_back(-profile.lower_count);
        break;
      case Statistic::kCounts: key = {profile.lower_count, profile.upper_count}; break;
      case Statistic::kLower: key = {profile.lower_count}; break;
      case Statistic::kUpper: key = {profile.upper_count}; break;
      case Statistic::kTotal: key = {profile.lower_count + profile.upper_count}; break;
    }
    auto it = fiber_value.find(key);
    if (it == fiber_value.end()) {
      fiber_value.emplace(std::move(key), prob);
    } else if (it->second != prob) {
      if (witness) *witness = "fiber split at " + format_permutation(p);
      return false;
    }
  }
  return true;
}

namespace {

IndicatorReport indicator_structure_impl(const DistTable& table, const Rational& theta,
                                         const Rational& zeta, bool check_allocation) {
  const Value n = table.n;
  // joint law of (record mask over positions 2..n, type word at the records)
  std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> joint;
  std::map<std::uint64_t, Rational> mask_marginal;
  for (const auto& [p, prob] : table.probabilities) {
    const InitialRanks ranks = to_initial_ranks(p);
    std::uint64_t mask = 0, types = 0;
    int record_count = 0;
    for (Value j = 2; j <= n; ++j) {
      const Value r = ranks.at(j);
      if (r == 1 || r == j) {
        mask |= 1ull << (j - 2);
        if (r == 1) types |= 1ull << record_count;
        ++record_count;
      }
    }
    joint[{mask, types}] += prob;
    mask_marginal[mask] += prob;
  }

  IndicatorReport out;
  const Rational thin = theta / (theta + zeta);

  // (i) record indicators independent with the step-law marginals
  out.records_independent = true;
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    Rational expected(1);
    for (Value j = 2; j <= n; ++j) {
      const Rational pj = (theta + zeta) / (theta + zeta + Rational(j - 2));
      expected *= (mask >> (j - 2)) & 1 ? pj : Rational(1) - pj;
    }
    auto it = mask_marginal.find(mask);
    const Rational actual = it == mask_marginal.end() ? Rational(0) : it->second;
    if (actual != expected) {
      out.records_independent = false;
      out.detail += "mask " + std::to_string(mask) + " off; ";
      break;
    }
  }

  // (ii) types iid Bernoulli(theta/(theta+zeta)) independent of the mask
  out.types_iid_thinning = true;
  for (const auto& [key, prob] : joint) {
    const auto [mask, types] = key;
    const int records = __builtin_popcountll(mask);
    int lowers = __builtin_popcountll(types);
    Rational expected = mask_marginal[mask] * pow(thin, lowers) *
                        pow(Rational(1) - thin, records - lowers);
    if (prob != expected) {
      out.types_iid_thinning = false;
      out.detail += "type split off at mask " + std::to_string(mask) + "; ";
      break;
    }
  }

  // (iii) conditionally on positions and counts, allocations equiprobable
  out.allocation_uniform = true;
  if (check_allocation) {
    std::map<std::pair<std::uint64_t, int>, Rational> reference;
    for (const auto& [key, prob] : joint) {
      const auto [mask, types] = key;
      auto ref_key = std::make_pair(mask, __builtin_popcountll(types));
      auto it = reference.find(ref_key);
      if (it == reference.end())
        reference.emplace(ref_key, prob);
      else if (it->second != prob) {
        out.allocation_uniform = false;
        out.detail += "allocation not uniform at mask " + std::to_string(mask) + "; ";
        break;
      }
    }
  }
  return out;
}

}  // namespace

IndicatorReport check_indicator_structure(const TwoParam& params, Value n) {
  const DistTable table = pushforward_table(n, TwoParamLaw{params});
  return indicator_structure_impl(table, params.theta, params.zeta, true);
}

IndicatorReport check_indicator_structure(const GeneralParams& params, Value n) {
  const DistTable table = pushforward_table(n, GeneralLaw{params});
  return indicator_structure_impl(table, params.theta, params.zeta, true);
}

IndicatorStats indicator_stats(const Permutation& p) {
  const InitialRanks ranks = to_initial_ranks(p);
  IndicatorStats out;
  for (Value j = 2; j <= p.size(); ++j) {
    const Value r = ranks.at(j);
    const bool record = r == 1 || r == j;
    out.record_at.push_back(record);
    if (record) {
      out.lower_type.push_back(r == 1);
      ++out.total_records;
    }
  }
  if (p.size() > 1) {
    out.intensity_estimate =
        static_cast<double>(out.total_records) / std::log(static_cast<double>(p.size()));
    if (out.total_records > 0) {
      Value lowers = 0;
      for (bool low : out.lower_type) lowers += low ? 1 : 0;
      out.thinning_estimate =
          static_cast<double>(lowers) / static_cast<double>(out.total_records);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

void add_check(SuiteReport& report, const std::string& name, bool pass,
               const std::string& detail = "") {
  report.checks.push_back(CheckLine{name, pass, detail});
}

std::string rational_str(const Rational& r) { return r.to_string(); }

}  // namespace

SuiteReport run_identities_suite() {
  SuiteReport report;
  report.name = "identities";

  bool recursion_matches_enumeration = true;
  bool identity_matches = true;
  for (Value n = 1; n <= 10 && recursion_matches_enumeration; ++n) {
    std::vector<std::vector<std::uint64_t>> hist(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for_each_word(n, [&](const std::vector<Value>& word) {
      Value low = 0, up = 0, mn = word[0], mx = word[0];
      for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] < mn) { mn = word[i]; ++low; }
        else if (word[i] > mx) { mx = word[i]; ++up; }
      }
      ++hist[static_cast<std::size_t>(low)][static_cast<std::size_t>(up)];
    });
    for (Value l = 0; l <= n - 1; ++l)
      for (Value u = 0; l + u <= n - 1; ++u) {
        const BigCount expected(hist[static_cast<std::size_t>(l)][static_cast<std::size_t>(u)]);
        if (record_stirling(n, l, u) != expected) recursion_matches_enumeration = false;
        if (record_stirling_via_identity(n, l, u) != expected) identity_matches = false;
      }
  }
  add_check(report, "recursion == exhaustive enumeration, n <= 10", recursion_matches_enumeration);
  add_check(report, "Stirling identity == enumeration, n <= 10", identity_matches);

  bool symmetric = true;
  for (Value n = 1; n <= 12; ++n)
    for (Value l = 0; l <= n - 1; ++l)
      for (Value u = 0; l + u <= n - 1; ++u)
        if (record_stirling(n, l, u) != record_stirling(n, u, l)) symmetric = false;
  add_check(report, "symmetry in (l,u), n <= 12", symmetric);

  bool marginal = true;
  for (Value n = 1; n <= 12; ++n)
    for (Value l = 0; l <= n - 1; ++l) {
      BigCount sum;
      for (Value u = 0; l + u <= n - 1; ++u) sum += record_stirling(n, l, u);
      if (sum != stirling1(n, l + 1)) marginal = false;
    }
  add_check(report, "marginal sums are signless Stirling numbers, n <= 12", marginal);

  bool gf = true;
  const std::vector<TwoParam> grid = {TwoParam(Rational(1), Rational(1)),
                                      TwoParam(Rational(2), Rational(3)),
                                      TwoParam(Rational(1, 2), Rational(5, 2))};
  for (const TwoParam& params : grid)
    for (Value n = 1; n <= 10; ++n)
      if (!check_generating_function(n, params)) gf = false;
  add_check(report, "generating function at (1,1),(2,3),(1/2,5/2), n <= 10", gf);
  return report;
}

namespace {

std::vector<std::pair<std::string, Law>> law_grid() {
  std::vector<std::pair<std::string, Law>> laws;
  laws.emplace_back("two-param(1,1)", TwoParamLaw{TwoParam(Rational(1), Rational(1))});
  laws.emplace_back("two-param(2,3)", TwoParamLaw{TwoParam(Rational(2), Rational(3))});
  laws.emplace_back("two-param(1/2,5/2)",
                    TwoParamLaw{TwoParam(Rational(1, 2), Rational(5, 2))});
  {
    GeneralParams g;
    g.theta = Rational(1);
    g.zeta = Rational(1);
    g.alpha_tail = Rational(1, 2);
    laws.emplace_back("general(1,1,alpha=1/2)", GeneralLaw{g});
  }
  {
    GeneralParams g;
    g.theta = Rational(2);
    g.zeta = Rational(3);
    g.alpha[1] = Rational(1, 2);
    g.alpha[-1] = Rational(-1, 3);
    g.alpha[2] = Rational(1, 4);
    g.alpha_tail = Rational(0);
    laws.emplace_back("general(2,3,mixed alpha)", GeneralLaw{g});
  }
  laws.emplace_back("pyramid(1/3)",
                    LimitLaw{LimitFamily(LimitKind::kBernoulliPyramid, Rational(1, 3))});
  laws.emplace_back("single-record(2/5)",
                    LimitLaw{LimitFamily(LimitKind::kSingleRecord, Rational(2, 5))});
  laws.emplace_back("theta-zero(2)", LimitLaw{LimitFamily(LimitKind::kThetaZero, Rational(2))});
  laws.emplace_back("zeta-zero(3/2)",
                    LimitLaw{LimitFamily(LimitKind::kZetaZero, Rational(3, 2))});
  return laws;
}

}  // namespace

SuiteReport run_pushforward_suite() {
  SuiteReport report;
  report.name = "pushforward";
  for (const auto& [name, law] : law_grid()) {
    bool sums = true, coherent = true;
    DistTable prev = pushforward_table(1, law);
    if (prev.total() != Rational(1)) sums = false;
    for (Value n = 2; n <= 7; ++n) {
      DistTable cur = pushforward_table(n, law);
      if (cur.total() != Rational(1)) sums = false;
      DistTable projected = restrict_pushforward(cur, n - 1);
      if (projected.probabilities.size() != prev.probabilities.size()) coherent = false;
      for (const auto& [p, prob] : projected.probabilities)
        if (prev.at(p) != prob) coherent = false;
      prev = std::move(cur);
    }
    add_check(report, "sums to 1, n <= 7: " + name, sums);
    add_check(report, "coherent under restrict, n <= 7: " + name, coherent);
  }

  const std::vector<std::pair<Value, Value>> windows = {{1, 2}, {2, 2}, {3, 1}};
  for (const auto& [theta, zeta] : windows) {
    bool matches = true;
    for (Value n = 1; n <= 5; ++n) {
      DistTable via_window = pushforward_table(n, IntegerWindowLaw{theta, zeta});
      DistTable direct =
          pushforward_table(n, TwoParamLaw{TwoParam(Rational(theta), Rational(zeta))});
      if (via_window.probabilities != direct.probabilities) matches = false;
    }
    add_check(report,
              "window projection == two-param law, n <= 5: (" + std::to_string(theta) + "," +
                  std::to_string(zeta) + ")",
              matches);
  }
  return report;
}

SuiteReport run_uniformity_suite() {
  SuiteReport report;
  report.name = "uniformity";
  struct Case {
    std::string name;
    Law law;
    Statistic stat;
    bool expected;
  };
  GeneralParams g_half;
  g_half.theta = Rational(1);
  g_half.zeta = Rational(1);
  g_half.alpha_tail = Rational(1, 2);
  const std::vector<Case> cases = {
      {"two-param(2,3) | rec", TwoParamLaw{TwoParam(Rational(2), Rational(3))}, Statistic::kRec,
       true},
      {"two-param(2,3) | (l,u)", TwoParamLaw{TwoParam(Rational(2), Rational(3))},
       Statistic::kCounts, true},
      {"two-param(2,3) | l", TwoParamLaw{TwoParam(Rational(2), Rational(3))}, Statistic::kLower,
       false},
      {"two-param(2,3) | l+u", TwoParamLaw{TwoParam(Rational(2), Rational(3))},
       Statistic::kTotal, false},
      {"Ewens(2,1) | l", TwoParamLaw{TwoParam(Rational(2), Rational(1))}, Statistic::kLower,
       true},
      {"Ewens(1,3) | u", TwoParamLaw{TwoParam(Rational(1), Rational(3))}, Statistic::kUpper,
       true},
      {"equal(3/2,3/2) | l+u", TwoParamLaw{TwoParam(Rational(3, 2), Rational(3, 2))},
       Statistic::kTotal, true},
      {"uniform(1,1) | l", TwoParamLaw{TwoParam(Rational(1), Rational(1))}, Statistic::kLower,
       true},
      {"general(alpha=1/2) | rec", GeneralLaw{g_half}, Statistic::kRec, true},
      {"general(alpha=1/2) | (l,u)", GeneralLaw{g_half}, Statistic::kCounts, false},
  };
  for (const auto& c : cases) {
    const bool is_general = std::holds_alternative<GeneralLaw>(c.law);
    const Value n_max = is_general ? 6 : 7;
    bool uniform_everywhere = true;
    bool witness_found = false;
    for (Value n = 1; n <= n_max; ++n) {
      DistTable table = pushforward_table(n, c.law);
      const bool uniform = check_conditional_uniformity(table, c.stat);
      uniform_everywhere = uniform_everywhere && uniform;
      witness_found = witness_found || !uniform;
    }
    const bool pass = c.expected ? uniform_everywhere : witness_found;
    add_check(report, "conditional uniformity: " + c.name +
                          (c.expected ? " (uniform)" : " (has non-uniform witness)"),
              pass);
  }
  return report;
}

SuiteReport run_diagram_suite() {
  SuiteReport report;
  report.name = "diagram";

  bool round_trips = true;
  for (Value n = 1; n <= 8; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      if (from_initial_ranks(to_initial_ranks(p)) != p) round_trips = false;
    });
  add_check(report, "initial-rank bijection round trip, n <= 8", round_trips);

  bool diagram = true;
  for (Value n = 2; n <= 6; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      const Permutation restricted = restrict(p, n - 1);
      if (inverse(restricted) != classical_project(inverse(p), ProjectionMode::kOneRowDelete))
        diagram = false;
      if (hat_bijection(inverse(restricted), HatDirection::kForward) !=
          classical_project(hat_bijection(inverse(p), HatDirection::kForward),
                            ProjectionMode::kCycleDelete))
        diagram = false;
    });
  add_check(report, "commutative diagram with one-row and cycle deletion, n <= 6", diagram);

  bool fibers = true;
  for (Value n = 2; n <= 8; ++n) {
    std::map<Permutation, std::pair<std::uint64_t, std::map<Value, std::uint64_t>>> fiber;
    for_each_word(n, [&](const std::vector<Value>& word) {
      Permutation p(word);
      const RecordProfile profile = extract_records(p);
      Permutation image = fold_records(p);
      auto& slot = fiber.emplace(image, std::make_pair(0, std::map<Value, std::uint64_t>{}))
                       .first->second;
      slot.first += 1;
      slot.second[profile.lower_count] += 1;
    });
    BigCount total;
    for (const auto& [image, slot] : fiber) {
      const Value r = extract_records(image).lower_count + 1;
      if (BigCount(slot.first) != pow(BigCount(2), static_cast<std::uint64_t>(r)))
        fibers = false;
      for (const auto& [l, count] : slot.second)
        if (BigCount(count) != binomial(r, l)) fibers = false;
      total += BigCount(slot.first);
    }
    if (total != factorial(n)) fibers = false;
  }
  add_check(report, "fold fibers have size 2^r with binomial type split, n <= 8", fibers);

  bool conversions = true;
  for (Value n = 1; n <= 8; ++n)
    for (const CenteredComposition& c : enumerate_compositions(n)) {
      const RecordProfile profile = composition_to_profile(c);
      if (profile_to_composition(profile) != c) conversions = false;
      if (profile.n != n) conversions = false;
    }
  for (Value n = 1; n <= 6; ++n)
    for_each_word(n, [&](const std::vector<Value>& word) {
      const RecordProfile profile = extract_records(Permutation(word));
      const RecordProfile back = composition_to_profile(profile_to_composition(profile));
      if (back.values != profile.values) conversions = false;
    });
  add_check(report, "profile <-> composition round trips, n <= 8", conversions);
  return report;
}

SuiteReport run_boundary_suite() {
  SuiteReport report;
  report.name = "boundary";

  bool counts_match = true;
  for (Value n = 1; n <= 8; ++n) {
    std::map<CenteredComposition, std::uint64_t> observed;
    for_each_word(n, [&](const std::vector<Value>& word) {
      observed[profile_to_composition(extract_records(Permutation(word)))] += 1;
    });
    const auto all = enumerate_compositions(n);
    if (observed.size() != all.size()) counts_match = false;
    for (const CenteredComposition& c : all) {
      auto it = observed.find(c);
      const BigCount brute = it == observed.end() ? BigCount() : BigCount(it->second);
      if (d_count(c) != brute) counts_match = false;
    }
  }
  add_check(report, "d(lambda) == brute-force class size, n <= 8", counts_match);

  {
    const CenteredComposition spot = parse_composition("3,1,^1,3,2");
    std::uint64_t brute = 0;
    const RecordProfile target = composition_to_profile(spot);
    for_each_word(10, [&](const std::vector<Value>& word) {
      Value low = 0, up = 0, mn = word[0], mx = word[0];
      std::vector<Value> lows, ups;
      for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] < mn) { mn = word[i]; ++low; lows.push_back(word[i]); }
        else if (word[i] > mx) { mx = word[i]; ++up; ups.push_back(word[i]); }
      }
      if (low != target.lower_count || up != target.upper_count || word[0] != target.value_at(0))
        return;
      for (Value k = 1; k <= up; ++k)
        if (ups[static_cast<std::size_t>(k - 1)] != target.value_at(k)) return;
      for (Value k = 1; k <= low; ++k)
        if (lows[static_cast<std::size_t>(k - 1)] != target.value_at(-k)) return;
      ++brute;
    });
    const bool ok = d_count(spot) == BigCount(3024) && brute == 3024;
    add_check(report, "d(3,1,^1,3,2) == 3024 over the 10-element group", ok,
              "brute=" + std::to_string(brute));
  }

  bool ext_match = true;
  for (Value n = 1; n <= 5 && ext_match; ++n) {
    for (const CenteredComposition& lambda : enumerate_compositions(n)) {
      // two base permutations in the class, when available
      std::vector<Permutation> bases;
      const RecordProfile profile = composition_to_profile(lambda);
      for_each_word(n, [&](const std::vector<Value>& word) {
        if (bases.size() >= 2) return;
        Permutation p(word);
        const RecordProfile found = extract_records(p);
        if (found.values == profile.values && found.lower_count == profile.lower_count)
          bases.push_back(p);
      });
      for (const Permutation& base : bases) {
        const Value m_top = 8;
        std::map<CenteredComposition, std::uint64_t> observed;
        // enumerate all rank extensions of the base word up to size m_top
        std::vector<Value> ranks = to_initial_ranks(base).ranks();
        std::function<void(Value)> walk = [&](Value size) {
          if (size == m_top) return;
          for (Value r = 1; r <= size + 1; ++r) {
            ranks.push_back(r);
            observed[profile_to_composition(
                extract_records(from_initial_ranks(InitialRanks(ranks))))] += 1;
            walk(size + 1);
            ranks.pop_back();
          }
        };
        walk(n);
        for (const auto& [mu, count] : observed) {
          if (!extends(lambda, mu)) { ext_match = false; break; }
          if (d_ext(lambda, mu) != BigCount(count)) { ext_match = false; break; }
        }
      }
    }
  }
  add_check(report, "d(lambda,mu) == brute-force coherent extensions, n <= 5, m <= 8",
            ext_match);

  bool ratio_match = true;
  for (Value n = 1; n <= 4; ++n)
    for (const CenteredComposition& lambda : enumerate_compositions(n))
      for (Value m = n; m <= 9; ++m)
        for (const CenteredComposition& mu : enumerate_compositions(m)) {
          if (!extends(lambda, mu)) continue;
          const Rational direct =
              Rational(BigInt(d_ext(lambda, mu))) / Rational(BigInt(d_count(mu)));
          if (martin_ratio(lambda, mu) != direct) ratio_match = false;
        }
  add_check(report, "martin ratio closed form == exact quotient, m <= 9", ratio_match);

  bool comp_count = true;
  for (Value n = 2; n <= 14; ++n) {
    const Rational formula =
        pow(Rational(2), n - 3) * Rational(n + 2);  // 2^{n-3}(n+2), rational for n = 2
    if (Rational(BigInt(composition_count(n))) != formula) comp_count = false;
  }
  add_check(report, "composition count == 2^{n-3}(n+2), 2 <= n <= 14", comp_count);
  return report;
}

SuiteReport run_dual_suite() {
  SuiteReport report;
  report.name = "dual";
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  bool all = true;
  for (const Rational& theta : grid)
    for (const Rational& zeta : grid) {
      const WTable table = w_table(TwoParam(theta, zeta), 9);
      if (!check_dual(table)) all = false;
      // the class probabilities themselves must sum to one per level
      for (Value n = 1; n <= 9; ++n) {
        Rational sum(0);
        for (Value l = 0; l <= n - 1; ++l)
          for (Value u = 0; l + u <= n - 1; ++u) sum += table.at(n, l, u);
        if (sum != Rational(1)) all = false;
      }
    }
  add_check(report, "dual recursion on per-permutation weights, two-param grid, n <= 9", all);
  return report;
}

SuiteReport run_indicators_suite() {
  SuiteReport report;
  report.name = "indicators";
  {
    bool ok = true;
    for (Value n = 2; n <= 7; ++n) {
      IndicatorReport r = check_indicator_structure(TwoParam(Rational(1), Rational(1)), n);
      if (!r.pass()) ok = false;
    }
    add_check(report, "uniform law: independence, thinning, allocation, n <= 7", ok);
  }
  {
    bool ok = true;
    for (Value n = 2; n <= 6; ++n) {
      IndicatorReport r = check_indicator_structure(TwoParam(Rational(3), Rational(1)), n);
      if (!(r.records_independent && r.types_iid_thinning)) ok = false;
    }
    add_check(report, "Ewens(3,1): independence and thinning with p = 3/4, n <= 6", ok);
  }
  {
    GeneralParams g;
    g.theta = Rational(1);
    g.zeta = Rational(1);
    g.alpha_tail = Rational(1, 2);
    IndicatorReport r = check_indicator_structure(g, 5);
    add_check(report, "negative control: nonzero alpha breaks indicator independence",
              !r.records_independent);
  }
  return report;
}

SuiteReport run_errata_suite() {
  SuiteReport report;
  report.name = "errata";

  {
    // (1) the printed center-law display does not normalize
    Rational printed_sum(0);
    const TwoParam uniform(Rational(1), Rational(1));
    for (Value r = 1; r <= 3; ++r) printed_sum += pe_pmf_printed(3, uniform, r);
    const bool fails = printed_sum != Rational(1);
    bool corrected_ok = true;
    for (Value n = 1; n <= 8; ++n) {
      const TwoParam params(Rational(2), Rational(3));
      std::map<Value, Rational> center_law;
      const DistTable table = pushforward_table(n, TwoParamLaw{params});
      for (const auto& [p, prob] : table.probabilities) center_law[p.at(1)] += prob;
      for (Value r = 1; r <= n; ++r)
        if (pe_pmf(n, params, r) != center_law[r]) corrected_ok = false;
    }
    add_check(report, "printed center display fails normalization at (3,1,1)", fails,
              "sum = " + rational_str(printed_sum));
    add_check(report, "corrected center law == exact center marginal, n <= 8", corrected_ok);
  }

  {
    // (2) the per-rank reading of the generalized step law does not normalize
    GeneralParams g;
    g.theta = Rational(1);
    g.zeta = Rational(1);
    g.alpha[1] = Rational(1, 2);
    g.alpha_tail = Rational(0);
    const RecordProfile state = extract_records(parse_permutation("1,3,2"));
    Rational literal_sum(0);
    for (const auto& [rank, prob] : step_law_literal(state, 4, g)) literal_sum += prob;
    Rational gap_sum(0);
    for (const auto& [rank, prob] : step_law(state, 4, g)) gap_sum += prob;
    const Rational expected_defect =
        (g.theta + g.zeta + Rational(2) - g.alpha[1]) / (g.theta + g.zeta + Rational(2));
    add_check(report, "per-rank step display fails sum-to-one on state (1,3,2)",
              literal_sum == expected_defect && literal_sum != Rational(1),
              "sum = " + rational_str(literal_sum));
    add_check(report, "gap-level step law normalizes on the same state",
              gap_sum == Rational(1));
  }

  {
    // (3) printed closed form vs the dynamics path product
    bool factorial_gap = true;
    GeneralParams zero;
    zero.theta = Rational(1);
    zero.zeta = Rational(1);
    zero.alpha_tail = Rational(0);
    std::string witness;
    for_each_word(5, [&](const std::vector<Value>& word) {
      Permutation p(word);
      const CenteredComposition c = profile_to_composition(extract_records(p));
      const Rational path = general_perm_probability(p, zero);
      const Rational corrected = general_class_probability(c, zero);
      const Rational printed = general_class_probability_printed(c, zero);
      if (path != corrected) factorial_gap = false;
      Rational factorials(1);
      for (Value k = -c.lower_count; k <= c.upper_count(); ++k) {
        if (k == 0) continue;
        factorials *= Rational(BigInt(factorial(c.part_at(k) - 1)));
      }
      if (printed != corrected * factorials) factorial_gap = false;
      if (witness.empty() && factorials != Rational(1))
        witness = format_permutation(p) + ": printed/path = " + rational_str(printed / path);
    });
    add_check(report,
              "printed closed form == path product times prod (lambda_k - 1)! at alpha == 0",
              factorial_gap, witness);

    // index shift of the record factors, visible at alpha != 0
    GeneralParams shifted;
    shifted.theta = Rational(1);
    shifted.zeta = Rational(1);
    shifted.alpha[-1] = Rational(1, 2);
    shifted.alpha[-2] = Rational(1, 3);
    shifted.alpha_tail = Rational(0);
    const CenteredComposition lambda = parse_composition("1,1,^1");  // l = 2, all parts 1
    const Rational corrected = general_class_probability(lambda, shifted);
    const Rational printed = general_class_probability_printed(lambda, shifted);
    // corrected lower factors: theta (theta + a_{-1}); printed: (theta + a_{-1})(theta + a_{-1} + a_{-2})
    const Rational expected_shift =
        (shifted.theta + shifted.alpha[-1] + shifted.alpha[-2]) / shifted.theta;
    add_check(report, "printed record factors are index-shifted by (theta + A_l)/theta",
              printed == corrected * expected_shift,
              "ratio = " + rational_str(printed / corrected));
  }
  return report;
}

// ---------------------------------------------------------------------------
// statistical suites

namespace {

struct ChiSqCase {
  std::string name;
  DistTable table;
  std::function<Permutation(Rng&)> draw;
  std::uint64_t n_draws;
};

CheckLine run_chi_square_case(const ChiSqCase& c, std::uint64_t seed) {
  Rng rng(seed);
  std::map<Permutation, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < c.n_draws; ++i) counts[c.draw(rng)] += 1;
  const DivergenceReport report = compare_exact_empirical(c.table, counts);
  const double cells = static_cast<double>(c.table.probabilities.size());
  const double tv_bound = 3.0 * std::sqrt(cells / static_cast<double>(c.n_draws));
  const bool pass = report.p_value > 1e-3 && report.total_variation < tv_bound &&
                    !report.zero_cell_violation;
  return CheckLine{c.name, pass, report.to_string()};
}

}  // namespace

SuiteReport run_sampler_suite(std::uint64_t seed, int jobs) {
  (void)jobs;
  SuiteReport report;
  report.name = "samplers";

  const TwoParam tp23(Rational(2), Rational(3));
  const TwoParam tp11(Rational(1), Rational(1));
  GeneralParams g_half;
  g_half.theta = Rational(1);
  g_half.zeta = Rational(1);
  g_half.alpha_tail = Rational(1, 2);

  std::vector<ChiSqCase> cases;
  cases.push_back({"two-param(2,3), n=4, 1e5 draws",
                   pushforward_table(4, TwoParamLaw{tp23}),
                   [&](Rng& r) { return sample_two_param(4, tp23, r); }, 100000});
  cases.push_back({"two-param(1,1), n=5, 1e5 draws",
                   pushforward_table(5, TwoParamLaw{tp11}),
                   [&](Rng& r) { return sample_two_param(5, tp11, r); }, 100000});
  cases.push_back({"general(alpha=1/2), n=4, 1e5 draws",
                   pushforward_table(4, GeneralLaw{g_half}),
                   [&](Rng& r) { return sample_general(4, g_half, r); }, 100000});
  const LimitFamily pyramid_half(LimitKind::kBernoulliPyramid, Rational(1, 2));
  cases.push_back({"pyramid(1/2), n=4, 1e5 draws",
                   pushforward_table(4, LimitLaw{pyramid_half}),
                   [&](Rng& r) { return sample_limit(4, pyramid_half, r); }, 100000});
  const LimitFamily single(LimitKind::kSingleRecord, Rational(2, 5));
  cases.push_back({"single-record(2/5), n=5, 1e5 draws",
                   pushforward_table(5, LimitLaw{single}),
                   [&](Rng& r) { return sample_limit(5, single, r); }, 100000});
  const LimitFamily tz(LimitKind::kThetaZero, Rational(2));
  cases.push_back({"theta-zero(2), n=4, 1e5 draws", pushforward_table(4, LimitLaw{tz}),
                   [&](Rng& r) { return sample_limit(4, tz, r); }, 100000});
  const LimitFamily zz(LimitKind::kZetaZero, Rational(3, 2));
  cases.push_back({"zeta-zero(3/2), n=4, 1e5 draws", pushforward_table(4, LimitLaw{zz}),
                   [&](Rng& r) { return sample_limit(4, zz, r); }, 100000});
  cases.push_back({"integer window (2,2), n=3, 1e5 draws",
                   pushforward_table(3, TwoParamLaw{TwoParam(Rational(2), Rational(2))}),
                   [&](Rng& r) { return sample_integer_window(3, 2, 2, r); }, 100000});
  cases.push_back({"integer window (3,1), n=4, 1e5 draws",
                   pushforward_table(4, TwoParamLaw{TwoParam(Rational(3), Rational(1))}),
                   [&](Rng& r) { return sample_integer_window(4, 3, 1, r); }, 100000});

  std::uint64_t salt = 0;
  for (const auto& c : cases) report.checks.push_back(run_chi_square_case(c, seed + ++salt));

  {
    // pyramid degenerate endpoints and the exact product form at p = 1/2
    bool ok = true;
    Rng rng(seed + 101);
    const LimitFamily p1(LimitKind::kBernoulliPyramid, Rational(1));
    const LimitFamily p0(LimitKind::kBernoulliPyramid, Rational(0));
    std::vector<Value> desc{5, 4, 3, 2, 1}, asc{1, 2, 3, 4, 5};
    for (int i = 0; i < 200; ++i) {
      if (sample_limit(5, p1, rng) != Permutation(desc)) ok = false;
      if (sample_limit(5, p0, rng) != Permutation(asc)) ok = false;
    }
    const DistTable table = pushforward_table(4, LimitLaw{pyramid_half});
    for (const auto& [p, prob] : table.probabilities) {
      const RecordProfile profile = extract_records(p);
      const Rational expected = pow(Rational(1, 2), profile.lower_count) *
                                pow(Rational(1, 2), profile.upper_count);
      if (profile.lower_count + profile.upper_count != 3 || prob != expected) ok = false;
    }
    add_check(report, "pyramid endpoints concentrate and p^l (1-p)^u holds at p = 1/2", ok);
  }

  {
    // conditioned sampler: chi-square over the full 3024-element class
    const CenteredComposition lambda = parse_composition("3,1,^1,3,2");
    const RecordProfile profile = composition_to_profile(lambda);
    DistTable class_table;
    class_table.n = 10;
    {
      // enumerate the class: at each step take the next record either way or
      // any unused middle value between the running extremes
      const Rational uniform_mass = Rational(1) / Rational(BigInt(d_count(lambda)));
      std::vector<Value> word{profile.value_at(0)};
      std::vector<bool> used(11, false);
      used[static_cast<std::size_t>(profile.value_at(0))] = true;
      Value lo = 0, hi = 0;
      std::function<void()> walk = [&] {
        if (static_cast<Value>(word.size()) == 10) {
          class_table.probabilities[Permutation(word)] = uniform_mass;
          return;
        }
        const Value cur_min = profile.value_at(-lo), cur_max = profile.value_at(hi);
        if (lo < profile.lower_count) {
          const Value v = profile.value_at(-(lo + 1));
          word.push_back(v);
          used[static_cast<std::size_t>(v)] = true;
          ++lo;
          walk();
          --lo;
          used[static_cast<std::size_t>(v)] = false;
          word.pop_back();
        }
        if (hi < profile.upper_count) {
          const Value v = profile.value_at(hi + 1);
          word.push_back(v);
          used[static_cast<std::size_t>(v)] = true;
          ++hi;
          walk();
          --hi;
          used[static_cast<std::size_t>(v)] = false;
          word.pop_back();
        }
        for (Value v = cur_min + 1; v < cur_max; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          word.push_back(v);
          used[static_cast<std::size_t>(v)] = true;
          walk();
          used[static_cast<std::size_t>(v)] = false;
          word.pop_back();
        }
      };
      walk();
    }
    const bool class_size_ok = class_table.probabilities.size() == 3024;
    ChiSqCase c{"conditioned sampler uniform over the 3024-element class, 1e6 draws",
                std::move(class_table),
                [&](Rng& r) { return sample_conditioned(profile, r); }, 1000000};
    CheckLine line = run_chi_square_case(c, seed + 102);
    line.pass = line.pass && class_size_ok;
    report.checks.push_back(std::move(line));
  }

  {
    // fixed shape: sampler matches the exact table and the boundary value
    RationalShape shape;
    shape.rho = {Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(3, 10),
                 Rational(2, 5),  Rational(7, 10), Rational(4, 5), Rational(9, 10),
                 Rational(19, 20)};
    shape.center_index = 4;
    const TwoSidedShape real_shape = shape.to_real();
    ChiSqCase c{"fixed-shape sampler vs exact table, n=5, 3e5 draws",
                pushforward_table(5, FixedShapeLaw{shape}),
                [&](Rng& r) { return sample_from_shape(real_shape, 5, r); }, 300000};
    report.checks.push_back(run_chi_square_case(c, seed + 103));

    const CenteredComposition lambda = parse_composition("^1,2");
    const double phi = phi_boundary(lambda, real_shape.rho, real_shape.center_index);
    Rng rng(seed + 104);
    std::uint64_t hits = 0;
    const std::uint64_t draws = 1000000;
    const Permutation target = parse_permutation("1,3,2");
    for (std::uint64_t i = 0; i < draws; ++i)
      if (sample_from_shape(real_shape, 3, rng) == target) ++hits;
    const double freq = static_cast<double>(hits) / static_cast<double>(draws);
    const bool ok = std::fabs(phi - 0.18) < 1e-12 &&
                    std::fabs(freq - phi) / phi < 0.05;
    std::ostringstream os;
    os << "phi=" << phi << " freq=" << freq;
    add_check(report, "boundary value 0.18 reproduced within 5% at 1e6 draws", ok, os.str());
  }

  {
    // shapes drawn from the stick-breaking limit reproduce the two-param law
    const DistTable table = pushforward_table(4, TwoParamLaw{tp23});
    Rng rng(seed + 105);
    std::map<Permutation, std::uint64_t> counts;
    const std::uint64_t draws = 1000000;
    for (std::uint64_t i = 0; i < draws; ++i) {
      const TwoSidedShape shape = sample_shape(tp23, 8, rng);
      counts[sample_from_shape(shape, 4, rng)] += 1;
    }
    const DivergenceReport div = compare_exact_empirical(table, counts);
    const double tv_bound =
        3.0 * std::sqrt(static_cast<double>(table.probabilities.size()) /
                        static_cast<double>(draws));
    add_check(report, "stick-breaking shapes reproduce two-param(2,3) at n=4, 1e6 draws",
              div.p_value > 1e-3 && div.total_variation < tv_bound, div.to_string());
  }
  return report;
}

SuiteReport run_negative_control(std::uint64_t seed) {
  SuiteReport report;
  report.name = "negative-control";
  const TwoParam right(Rational(2), Rational(3));
  const TwoParam swapped(Rational(3), Rational(2));
  const DistTable table = pushforward_table(4, TwoParamLaw{right});
  Rng rng(seed);
  std::map<Permutation, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < 100000; ++i) counts[sample_two_param(4, swapped, rng)] += 1;
  const DivergenceReport div = compare_exact_empirical(table, counts);
  add_check(report, "swapped parameters are rejected against the exact table",
            div.p_value < 1e-3, div.to_string());
  return report;
}

// ---------------------------------------------------------------------------
// Monte Carlo asymptotics

namespace {

constexpr std::uint64_t kBlockSize = 64;

struct BlockSums {
  std::vector<double> sum;
  std::vector<double> sumsq;
  double cross = 0.0;      // sum of x0 * x1, for correlations
  std::vector<double> m3;  // third and fourth central-moment accumulators use raw sums
  std::vector<double> m4;
};

// Runs trials in fixed blocks; block results combine in index order so the
// totals are independent of the worker count.
template <typename TrialFn>
BlockSums run_trials(std::uint64_t trials, int jobs, std::size_t width, bool with_cross,
                     TrialFn trial) {
  const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<double> x(width);
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      BlockSums& slot = partial[b];
      slot.sum.assign(width, 0.0);
      slot.sumsq.assign(width, 0.0);
      slot.m3.assign(width, 0.0);
      slot.m4.assign(width, 0.0);
      const std::uint64_t lo = b * kBlockSize;
      const std::uint64_t hi = std::min(trials, lo + kBlockSize);
      for (std::uint64_t t = lo; t < hi; ++t) {
        trial(t, x);
        for (std::size_t i = 0; i < width; ++i) {
          slot.sum[i] += x[i];
          slot.sumsq[i] += x[i] * x[i];
          slot.m3[i] += x[i] * x[i] * x[i];
          slot.m4[i] += x[i] * x[i] * x[i] * x[i];
        }
        if (with_cross) slot.cross += x[0] * x[1];
      }
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  BlockSums total;
  total.sum.assign(width, 0.0);
  total.sumsq.assign(width, 0.0);
  total.m3.assign(width, 0.0);
  total.m4.assign(width, 0.0);
  for (const BlockSums& slot : partial) {
    if (slot.sum.empty()) continue;
    for (std::size_t i = 0; i < width; ++i) {
      total.sum[i] += slot.sum[i];
      total.sumsq[i] += slot.sumsq[i];
      total.m3[i] += slot.m3[i];
      total.m4[i] += slot.m4[i];
    }
    total.cross += slot.cross;
  }
  return total;
}

double mean_of(const BlockSums& s, std::size_t i, std::uint64_t trials) {
  return s.sum[i] / static_cast<double>(trials);
}

double var_of(const BlockSums& s, std::size_t i, std::uint64_t trials) {
  const double m = mean_of(s, i, trials);
  return (s.sumsq[i] - static_cast<double>(trials) * m * m) /
         static_cast<double>(trials - 1);
}

double se_of(const BlockSums& s, std::size_t i, std::uint64_t trials) {
  return std::sqrt(var_of(s, i, trials) / static_cast<double>(trials));
}

// One pass of the two-parameter rank stream, collecting the record features
// the experiments need. Values of tracked records live on the integer scale
// of the current prefix.
struct WalkFeatures {
  Value lower = 0, upper = 0;
  Value center_value = 1;
  Value first_upper_value = -1, first_lower_value = -1;
  Value adjacent_lower = 0;
  std::vector<Value> lower_times, upper_times;
  std::vector<Value> upper_values;  // all upper record values, when requested
};

WalkFeatures walk_two_param(const TwoParam& params, Value n, Rng& rng, bool want_times,
                            bool want_upper_values) {
  const double theta = params.theta.to_double();
  const double zeta = params.zeta.to_double();
  WalkFeatures f;
  Value last_lower_time = -2;
  for (Value j = 2; j <= n; ++j) {
    const double denom = theta + zeta + static_cast<double>(j - 2);
    const double a = rng.next_double() * denom;
    Value rank;
    if (a < theta) {
      rank = 1;
    } else if (a < theta + static_cast<double>(j - 2)) {
      rank = 2 + static_cast<Value>(rng.next_below(static_cast<std::uint64_t>(j - 2)));
    } else {
      rank = j;
    }
    // shift tracked values that sit at or above the new rank
    if (rank <= f.center_value) ++f.center_value;
    if (f.first_upper_value >= 0 && rank <= f.first_upper_value) ++f.first_upper_value;
    if (f.first_lower_value >= 0 && rank <= f.first_lower_value) ++f.first_lower_value;
    if (want_upper_values) {
      for (auto it = f.upper_values.rbegin();
           it != f.upper_values.rend() && *it >= rank; ++it)
        *it += 1;
    }
    if (rank == 1) {
      ++f.lower;
      if (f.first_lower_value < 0) f.first_lower_value = 1;
      if (want_times) f.lower_times.push_back(j);
      if (last_lower_time == j - 1) ++f.adjacent_lower;
      last_lower_time = j;
    } else if (rank == j) {
      ++f.upper;
      if (f.first_upper_value < 0) f.first_upper_value = j;
      if (want_times) f.upper_times.push_back(j);
      if (want_upper_values) f.upper_values.push_back(j);
    }
  }
  return f;
}

}  // namespace

std::string McReport::to_json() const {
  nlohmann::json stats_json;
  for (const auto& [k, v] : statistics) stats_json[k] = v;
  nlohmann::json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["n"] = n;
  j["trials"] = trials;
  j["seed"] = seed;
  j["statistics"] = stats_json;
  j["verdict"] = verdict;
  return j.dump();
}

std::string McReport::to_table() const {
  std::ostringstream os;
  os << "experiment: " << experiment << "\nparams: " << params << "\nn: " << n
     << "\ntrials: " << trials << "\nseed: " << seed << '\n';
  for (const auto& [k, v] : statistics) os << "  " << k << " = " << v << '\n';
  os << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Experiment parse_experiment(const std::string& name) {
  if (name == "shape-convergence") return Experiment::kShapeConvergence;
  if (name == "poisson-times") return Experiment::kPoissonTimes;
  if (name == "poisson-values") return Experiment::kPoissonValues;
  if (name == "adjacent-pairs") return Experiment::kAdjacentPairs;
  if (name == "gaussian-counts") return Experiment::kGaussianCounts;
  throw std::invalid_argument("unknown experiment: " + name);
}

std::string experiment_name(Experiment experiment) {
  switch (experiment) {
    case Experiment::kShapeConvergence: return "shape-convergence";
    case Experiment::kPoissonTimes: return "poisson-times";
    case Experiment::kPoissonValues: return "poisson-values";
    case Experiment::kAdjacentPairs: return "adjacent-pairs";
    case Experiment::kGaussianCounts: return "gaussian-counts";
  }
  return "?";
}

McReport mc_asymptotics(Experiment experiment, const TwoParam& params, Value n,
                        std::uint64_t trials, std::uint64_t seed, int jobs) {
  if (n < 2 || trials < 2) throw std::invalid_argument("need n >= 2 and trials >= 2");
  if (static_cast<double>(n) * static_cast<double>(trials) > 4e9)
    throw ResourceError("experiment budget exceeded");
  McReport report;
  report.experiment = experiment_name(experiment);
  report.params = "theta=" + params.theta.to_string() + ",zeta=" + params.zeta.to_string();
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  const double theta = params.theta.to_double();
  const double zeta = params.zeta.to_double();

  switch (experiment) {
    case Experiment::kShapeConvergence: {
      BlockSums sums = run_trials(trials, jobs, 3, false, [&](std::uint64_t t,
                                                              std::vector<double>& x) {
        Rng rng(seed, t);
        WalkFeatures f = walk_two_param(params, n, rng, false, false);
        x[0] = static_cast<double>(f.center_value) / static_cast<double>(n);
        // a record missing at the horizon estimates its limit by the boundary
        x[1] = f.first_upper_value < 0 ? 1.0
                                       : static_cast<double>(f.first_upper_value) /
                                             static_cast<double>(n);
        x[2] = f.first_lower_value < 0
                   ? 0.0
                   : static_cast<double>(f.first_lower_value) / static_cast<double>(n);
      });
      const double m0 = theta / (theta + zeta);
      const double m1 = 1.0 - (1.0 - m0) * zeta / (zeta + 1.0);
      const double mm1 = m0 * theta / (theta + 1.0);
      report.statistics["center_mean"] = mean_of(sums, 0, trials);
      report.statistics["center_target"] = m0;
      report.statistics["center_se"] = se_of(sums, 0, trials);
      report.statistics["center_z"] =
          (mean_of(sums, 0, trials) - m0) / se_of(sums, 0, trials);
      report.statistics["first_upper_mean"] = mean_of(sums, 1, trials);
      report.statistics["first_upper_target"] = m1;
      report.statistics["first_upper_z"] =
          (mean_of(sums, 1, trials) - m1) / se_of(sums, 1, trials);
      report.statistics["first_lower_mean"] = mean_of(sums, 2, trials);
      report.statistics["first_lower_target"] = mm1;
      report.statistics["first_lower_z"] =
          (mean_of(sums, 2, trials) - mm1) / se_of(sums, 2, trials);
      report.verdict = std::fabs(report.statistics["center_z"]) < 4.0;
      break;
    }
    case Experiment::kPoissonTimes: {
      const Value lo_time = (n + 9) / 10;  // window [0.1 n, n]
      BlockSums sums = run_trials(trials, jobs, 2, false, [&](std::uint64_t t,
                                                              std::vector<double>& x) {
        Rng rng(seed, t);
        WalkFeatures f = walk_two_param(params, n, rng, true, false);
        std::uint64_t low = 0, up = 0;
        for (Value time : f.lower_times)
          if (time >= lo_time) ++low;
        for (Value time : f.upper_times)
          if (time >= lo_time) ++up;
        x[0] = static_cast<double>(low);
        x[1] = static_cast<double>(up);
      });
      const double log10 = std::log(10.0);
      const double targets[2] = {theta * log10, zeta * log10};
      bool ok = true;
      const char* names[2] = {"lower", "upper"};
      for (std::size_t i = 0; i < 2; ++i) {
        const double mean = mean_of(sums, i, trials);
        const double var = var_of(sums, i, trials);
        const double se_mean = se_of(sums, i, trials);
        // standard error of the sample variance from empirical fourth moments
        const double m = mean;
        const double mu2 = var;
        const double mu4 = sums.m4[i] / static_cast<double>(trials) -
                           4.0 * m * sums.m3[i] / static_cast<double>(trials) +
                           6.0 * m * m * sums.sumsq[i] / static_cast<double>(trials) -
                           3.0 * m * m * m * m;
        const double se_var =
            std::sqrt(std::max(0.0, mu4 - mu2 * mu2) / static_cast<double>(trials));
        const double z_mean = (mean - targets[i]) / se_mean;
        const double z_var = (var - targets[i]) / se_var;
        report.statistics[std::string(names[i]) + "_count_mean"] = mean;
        report.statistics[std::string(names[i]) + "_count_var"] = var;
        report.statistics[std::string(names[i]) + "_target"] = targets[i];
        report.statistics[std::string(names[i]) + "_z_mean"] = z_mean;
        report.statistics[std::string(names[i]) + "_z_var"] = z_var;
        if (std::fabs(z_mean) >= 4.0 || std::fabs(z_var) >= 4.0) ok = false;
      }
      report.verdict = ok;
      break;
    }
    case Experiment::kPoissonValues: {
      // paired test of E[count] == zeta * int_{[a,b] cap [rho0,1]} x^{j-1} dx
      const double a = 0.5, b = 0.9;
      BlockSums sums = run_trials(trials, jobs, 2, false, [&](std::uint64_t t,
                                                              std::vector<double>& x) {
        Rng rng(seed, t);
        WalkFeatures f = walk_two_param(params, n, rng, true, true);
        const double rho0 = static_cast<double>(f.center_value) / static_cast<double>(n);
        double count1 = 0, count2 = 0;
        for (std::size_t k = 0; k + 1 < f.upper_values.size(); ++k) {
          const double value =
              static_cast<double>(f.upper_values[k]) / static_cast<double>(n);
          const Value duration = f.upper_times[k + 1] - f.upper_times[k];
          if (value >= a && value <= b) {
            if (duration == 1) count1 += 1;
            if (duration == 2) count2 += 1;
          }
        }
        const double lo = std::max(a, rho0);
        const double int1 = b > lo ? b - lo : 0.0;
        const double int2 = b > lo ? (b * b - lo * lo) / 2.0 : 0.0;
        x[0] = count1 - zeta * int1;
        x[1] = count2 - zeta * int2;
      });
      const double z1 = mean_of(sums, 0, trials) / se_of(sums, 0, trials);
      const double z2 = mean_of(sums, 1, trials) / se_of(sums, 1, trials);
      report.statistics["duration1_z"] = z1;
      report.statistics["duration2_z"] = z2;
      report.statistics["duration1_mean_diff"] = mean_of(sums, 0, trials);
      report.statistics["duration2_mean_diff"] = mean_of(sums, 1, trials);
      report.verdict = std::fabs(z1) < 5.0 && std::fabs(z2) < 5.0;
      break;
    }
    case Experiment::kAdjacentPairs: {
      BlockSums sums = run_trials(trials, jobs, 1, false, [&](std::uint64_t t,
                                                              std::vector<double>& x) {
        Rng rng(seed, t);
        WalkFeatures f = walk_two_param(params, n, rng, false, false);
        x[0] = static_cast<double>(f.adjacent_lower);
      });
      const double target = theta * theta / (theta + zeta);  // theta E[rho0]
      const double mean = mean_of(sums, 0, trials);
      const double z = (mean - target) / se_of(sums, 0, trials);
      report.statistics["adjacent_mean"] = mean;
      report.statistics["target"] = target;
      report.statistics["z"] = z;
      report.verdict = std::fabs(z) < 4.0;
      break;
    }
    case Experiment::kGaussianCounts: {
      auto moments = [&](double t, double z, double& mean, double& var) {
        mean = 0.0;
        var = 0.0;
        for (Value j = 2; j <= n; ++j) {
          const double p = t / (t + z + static_cast<double>(j - 2));
          mean += p;
          var += p * (1.0 - p);
        }
      };
      double exact_mean_l, exact_var_l, exact_mean_u, exact_var_u;
      moments(theta, zeta, exact_mean_l, exact_var_l);
      moments(zeta, theta, exact_mean_u, exact_var_u);
      BlockSums sums = run_trials(trials, jobs, 2, true, [&](std::uint64_t t,
                                                             std::vector<double>& x) {
        Rng rng(seed, t);
        WalkFeatures f = walk_two_param(params, n, rng, false, false);
        x[0] = (static_cast<double>(f.lower) - exact_mean_l) / std::sqrt(exact_var_l);
        x[1] = (static_cast<double>(f.upper) - exact_mean_u) / std::sqrt(exact_var_u);
      });
      const double mean0 = mean_of(sums, 0, trials);
      const double mean1 = mean_of(sums, 1, trials);
      const double corr =
          (sums.cross / static_cast<double>(trials) - mean0 * mean1) /
          std::sqrt(var_of(sums, 0, trials) * var_of(sums, 1, trials));
      const double corr_se = 1.0 / std::sqrt(static_cast<double>(trials));
      // the exact finite-n correlation, which the limit sends to 0
      double cov = 0.0;
      for (Value j = 2; j <= n; ++j) {
        const double d = theta + zeta + static_cast<double>(j - 2);
        cov -= theta * zeta / (d * d);
      }
      report.statistics["finite_n_correlation"] =
          cov / std::sqrt(exact_var_l * exact_var_u);
      report.statistics["lower_std_mean"] = mean0;
      report.statistics["upper_std_mean"] = mean1;
      report.statistics["lower_std_var"] = var_of(sums, 0, trials);
      report.statistics["upper_std_var"] = var_of(sums, 1, trials);
      report.statistics["cross_correlation"] = corr;
      report.statistics["corr_se"] = corr_se;
      report.statistics["lower_kurtosis"] =
          sums.m4[0] / static_cast<double>(trials);  // of the standardized count
      report.verdict = std::fabs(corr) < 4.0 * corr_se;
      break;
    }
  }
  return report;
}

SuiteReport run_asymptotics_suite(std::uint64_t seed, int jobs) {
  SuiteReport report;
  report.name = "asymptotics";
  const TwoParam uniform(Rational(1), Rational(1));
  const TwoParam tp23(Rational(2), Rational(3));
  const TwoParam tp21(Rational(2), Rational(1));

  {
    const MomentReport m = record_moments(uniform, 10000, 4000, seed + 1);
    const bool ok = std::fabs(m.z_mean) < 4.0 && m.ratio_to_theta_log_n > 0.9 &&
                    m.ratio_to_theta_log_n < 1.1;
    add_check(report, "lower-record mean matches the exact step-law sum at n = 1e4", ok,
              m.to_string());
  }
  {
    const McReport r = mc_asymptotics(Experiment::kShapeConvergence, uniform, 100000, 3000,
                                      seed + 2, jobs);
    add_check(report, "scaled center -> beta(1,1) mean at n = 1e5", r.verdict, r.to_json());
  }
  {
    const McReport r =
        mc_asymptotics(Experiment::kShapeConvergence, tp23, 100000, 3000, seed + 3, jobs);
    add_check(report, "scaled center -> beta(2,3) mean at n = 1e5", r.verdict, r.to_json());
  }
  {
    const McReport r =
        mc_asymptotics(Experiment::kPoissonTimes, tp21, 10000, 10000, seed + 4, jobs);
    add_check(report, "record-time counts in [0.1n, n] are Poisson(theta ln 10)/(zeta ln 10)",
              r.verdict, r.to_json());
  }
  {
    const McReport r =
        mc_asymptotics(Experiment::kAdjacentPairs, uniform, 100000, 2000, seed + 5, jobs);
    add_check(report, "adjacent lower-record pairs match the mixed Poisson mean", r.verdict,
              r.to_json());
  }
  {
    const McReport r =
        mc_asymptotics(Experiment::kGaussianCounts, uniform, 100000, 1500, seed + 6, jobs);
    add_check(report, "standardized (l,u) cross-correlation compatible with 0", r.verdict,
              r.to_json());
  }
  return report;
}

}  // namespace recperm
