#include "recperm/stats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "recperm/rng.hpp"

namespace recperm {

namespace {

// Regularized incomplete gamma functions, series and continued-fraction
// branches (Numerical Recipes style).
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a, term = sum, ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double chi_square_pvalue(double statistic, double dof) {
  if (dof <= 0.0) throw std::invalid_argument("chi-square needs dof > 0");
  if (statistic <= 0.0) return 1.0;
  const double a = dof / 2.0, x = statistic / 2.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

std::string DivergenceReport::to_string() const {
  std::ostringstream os;
  os << "tv=" << total_variation << " chi2=" << chi_square << " dof=" << dof
     << " p=" << p_value << " N=" << sample_size;
  if (zero_cell_violation) os << " (mass on a zero cell)";
  return os.str();
}

DivergenceReport compare_exact_empirical(const DistTable& table,
                                         const std::map<Permutation, std::uint64_t>& counts) {
  DivergenceReport out;
  for (const auto& [p, c] : counts) {
    if (p.size() != table.n)
      throw std::invalid_argument("sample size does not match the table's n");
    out.sample_size += c;
  }
  if (out.sample_size == 0) throw std::invalid_argument("no samples");
  const double total = static_cast<double>(out.sample_size);

  double tv = 0.0, chi2 = 0.0;
  std::int64_t cells = 0;
  for (const auto& [p, prob] : table.probabilities) {
    const auto it = counts.find(p);
    const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    const double expected = prob.to_double() * total;
    tv += std::fabs(observed / total - prob.to_double());
    if (expected > 0.0) {
      chi2 += (observed - expected) * (observed - expected) / expected;
      ++cells;
    } else if (observed > 0.0) {
      out.zero_cell_violation = true;
    }
  }
  // mass observed outside the table's support
  for (const auto& [p, c] : counts) {
    if (table.probabilities.find(p) == table.probabilities.end()) {
      tv += static_cast<double>(c) / total;
      out.zero_cell_violation = true;
    }
  }
  out.total_variation = 0.5 * tv;
  out.chi_square = chi2;
  out.dof = cells > 1 ? cells - 1 : 1;
  out.p_value = out.zero_cell_violation
                    ? 0.0
                    : chi_square_pvalue(chi2, static_cast<double>(out.dof));
  return out;
}

std::string MomentReport::to_string() const {
  std::ostringstream os;
  os << "exact_mean=" << exact_mean << " exact_var=" << exact_variance
     << " emp_mean=" << empirical_mean << " emp_var=" << empirical_variance
     << " se=" << se_mean << " z=" << z_mean << " ratio_to_theta_log_n=" << ratio_to_theta_log_n
     << " trials=" << trials;
  return os.str();
}

Rational exact_lower_record_mean(const TwoParam& params, Value n) {
  Rational sum(0);
  for (Value j = 2; j <= n; ++j)
    sum += params.theta / (params.theta + params.zeta + Rational(j - 2));
  return sum;
}

Rational exact_lower_record_variance(const TwoParam& params, Value n) {
  Rational sum(0);
  for (Value j = 2; j <= n; ++j) {
    const Rational p = params.theta / (params.theta + params.zeta + Rational(j - 2));
    sum += p * (Rational(1) - p);
  }
  return sum;
}

MomentReport record_moments(const TwoParam& params, Value n, std::uint64_t trials,
                            std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("record_moments needs n >= 1");
  MomentReport out;
  out.trials = trials;
  // exact moments computed in rationals at small n; in doubles beyond, where
  // exact bignum denominators would be pointlessly large
  if (n <= 64) {
    out.exact_mean = exact_lower_record_mean(params, n).to_double();
    out.exact_variance = exact_lower_record_variance(params, n).to_double();
  } else {
    const double theta = params.theta.to_double(), zeta = params.zeta.to_double();
    double mean = 0.0, var = 0.0;
    for (Value j = 2; j <= n; ++j) {
      const double p = theta / (theta + zeta + static_cast<double>(j - 2));
      mean += p;
      var += p * (1.0 - p);
    }
    out.exact_mean = mean;
    out.exact_variance = var;
  }
  const double theta = params.theta.to_double(), zeta = params.zeta.to_double();
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    std::uint64_t lower = 0;
    for (Value j = 2; j <= n; ++j) {
      const double denom = theta + zeta + static_cast<double>(j - 2);
      if (rng.next_double() * denom < theta) ++lower;
    }
    sum += static_cast<double>(lower);
    sumsq += static_cast<double>(lower) * static_cast<double>(lower);
  }
  if (trials > 0) {
    const double mean = sum / static_cast<double>(trials);
    out.empirical_mean = mean;
    out.empirical_variance =
        trials > 1 ? (sumsq - sum * mean) / static_cast<double>(trials - 1) : 0.0;
    out.se_mean = std::sqrt(out.empirical_variance / static_cast<double>(trials));
    out.z_mean = out.se_mean > 0.0 ? (mean - out.exact_mean) / out.se_mean : 0.0;
  }
  out.ratio_to_theta_log_n =
      n > 1 ? out.exact_mean / (theta * std::log(static_cast<double>(n))) : 0.0;
  return out;
}

}  // namespace recperm
