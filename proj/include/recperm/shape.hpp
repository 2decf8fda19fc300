#pragma once

#include <string>
#include <vector>

#include "recperm/params.hpp"
#include "recperm/poset.hpp"
#include "recperm/rng.hpp"

namespace recperm {

/// Truncated two-sided nondecreasing sequence (rho_k) in [0,1]: the limit of
/// scaled record values. Index k = 0 sits at center_index; tail masses are
/// rho at the lowest index and 1 - rho at the highest.
struct TwoSidedShape {
  std::vector<double> rho;
  Value center_index = 0;

  Value kmin() const { return -center_index; }
  Value kmax() const { return static_cast<Value>(rho.size()) - 1 - center_index; }
  double rho_at(Value k) const { return rho[static_cast<std::size_t>(k + center_index)]; }
  bool has(Value k) const { return k >= kmin() && k <= kmax(); }

  /// Gap of block k: rho_k - rho_{k-1} for k > 0, rho_{k+1} - rho_k for k < 0.
  double gap(Value k) const;
  double tail_mass_below() const { return rho_at(kmin()); }
  double tail_mass_above() const { return 1.0 - rho_at(kmax()); }

  /// Nondecreasing, inside [0,1]; throws std::invalid_argument otherwise.
  void validate() const;
};

/// Exact-rational shape for pushforward tables.
struct RationalShape {
  std::vector<Rational> rho;
  Value center_index = 0;

  Value kmin() const { return -center_index; }
  Value kmax() const { return static_cast<Value>(rho.size()) - 1 - center_index; }
  const Rational& rho_at(Value k) const {
    return rho[static_cast<std::size_t>(k + center_index)];
  }
  bool has(Value k) const { return k >= kmin() && k <= kmax(); }
  void validate() const;

  TwoSidedShape to_real() const;
};

/// Draws the two-sided stick-breaking limit shape truncated at |k| <= K:
/// rho_0 ~ beta(theta, zeta), then
///   rho_{-j} = rho_{-j+1} T_{-j},    T_{-j} ~ beta(theta + a_{-1}+...+a_{-j}, 1 - a_{-j}),
///   rho_j    = 1 - (1-rho_{j-1}) Z_j, Z_j ~ beta(zeta + a_1+...+a_j, 1 - a_j),
/// all independent; alpha == 0 gives the beta(theta,1)/beta(zeta,1) sticks.
TwoSidedShape sample_shape(const GeneralParams& params, Value truncation, Rng& rng);
TwoSidedShape sample_shape(const TwoParam& params, Value truncation, Rng& rng);
TwoSidedShape sample_shape(const GeneralParams& params, Value truncation, std::uint64_t seed);
TwoSidedShape sample_shape(const TwoParam& params, Value truncation, std::uint64_t seed);

/// JSON shape file: {"rho":[...ascending...], "center_index": i}.
TwoSidedShape read_shape_file(const std::string& path);
std::string shape_to_json(const TwoSidedShape& shape);
TwoSidedShape shape_from_json(const std::string& text);

}  // namespace recperm
