#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "recperm/table.hpp"

namespace recperm {

/// Upper-tail probability of the chi-square distribution with dof degrees of
/// freedom, via the regularized incomplete gamma function.
double chi_square_pvalue(double statistic, double dof);

struct DivergenceReport {
  double total_variation = 0.0;
  double chi_square = 0.0;
  std::int64_t dof = 0;
  double p_value = 1.0;
  std::uint64_t sample_size = 0;
  bool zero_cell_violation = false;  // observed mass on a zero-probability cell

  std::string to_string() const;
};

/// Total variation and chi-square of empirical counts against an exact
/// table. Cells with zero exact probability must be empty; they are excluded
/// from the chi-square and flagged when hit. Throws std::invalid_argument on
/// a size mismatch.
DivergenceReport compare_exact_empirical(const DistTable& table,
                                         const std::map<Permutation, std::uint64_t>& counts);

struct MomentReport {
  double exact_mean = 0.0;
  double exact_variance = 0.0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  double se_mean = 0.0;
  double z_mean = 0.0;
  double ratio_to_theta_log_n = 0.0;
  std::uint64_t trials = 0;

  std::string to_string() const;
};

/// Exact E[l] = sum_{j=2}^{n} theta/(theta+zeta+j-2) and the matching
/// variance of the independent record indicators.
Rational exact_lower_record_mean(const TwoParam& params, Value n);
Rational exact_lower_record_variance(const TwoParam& params, Value n);

/// Exact moments of the lower record count plus Monte Carlo counterparts
/// from `trials` streams of length n.
MomentReport record_moments(const TwoParam& params, Value n, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace recperm
