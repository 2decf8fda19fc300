#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recperm/stats.hpp"
#include "recperm/table.hpp"

namespace recperm {

/// Statistics a table can be conditioned on.
enum class Statistic { kRec, kCounts, kLower, kUpper, kTotal };

/// Exact check: is the table constant on every fiber of the statistic?
bool check_conditional_uniformity(const DistTable& table, Statistic stat,
                                  std::string* witness = nullptr);

struct IndicatorReport {
  bool records_independent = false;   // B_j independent Bernoulli((t+z)/(t+z+j-2))
  bool types_iid_thinning = false;    // record types iid Bernoulli(t/(t+z)), independent of B
  bool allocation_uniform = false;    // given positions and counts, allocations equiprobable
  std::string detail;

  bool pass() const { return records_independent && types_iid_thinning && allocation_uniform; }
};

/// Exact factorization checks of the record indicators against the joint
/// pushforward at size n. For the two-parameter family all three hold; the
/// general family with nonzero alpha is the negative control.
IndicatorReport check_indicator_structure(const TwoParam& params, Value n);
IndicatorReport check_indicator_structure(const GeneralParams& params, Value n);

/// Record indicators of one permutation: B_j over positions 2..n, the running
/// count S_n of proper records, the type word I at successive record times,
/// and the plug-in estimates of the record intensity (S_n / log n) and the
/// lower-record thinning probability.
struct IndicatorStats {
  std::vector<bool> record_at;   // B_j, index j-2
  std::vector<bool> lower_type;  // I at successive proper record times
  Value total_records = 0;       // S_n
  double intensity_estimate = 0.0;
  double thinning_estimate = 0.0;
};

IndicatorStats indicator_stats(const Permutation& p);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckLine> checks;

  bool pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

SuiteReport run_identities_suite();
SuiteReport run_pushforward_suite();
SuiteReport run_diagram_suite();
SuiteReport run_uniformity_suite();
SuiteReport run_indicators_suite();
SuiteReport run_dual_suite();
SuiteReport run_errata_suite();
SuiteReport run_boundary_suite();
SuiteReport run_sampler_suite(std::uint64_t seed, int jobs);
SuiteReport run_asymptotics_suite(std::uint64_t seed, int jobs);
/// Negative control: a sampler with swapped parameters must be rejected.
SuiteReport run_negative_control(std::uint64_t seed);

enum class Experiment {
  kShapeConvergence,
  kPoissonTimes,
  kPoissonValues,
  kAdjacentPairs,
  kGaussianCounts,
};

struct McReport {
  std::string experiment;
  std::string params;
  Value n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> statistics;
  bool verdict = false;

  std::string to_json() const;
  std::string to_table() const;
};

/// Monte Carlo checks of the limit laws, trial-parallel with per-trial
/// substreams; the aggregate is independent of the number of workers.
McReport mc_asymptotics(Experiment experiment, const TwoParam& params, Value n,
                        std::uint64_t trials, std::uint64_t seed, int jobs);

Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment experiment);

}  // namespace recperm
