#include "recperm/params.hpp"

#include <sstream>
#include <stdexcept>

namespace recperm {

TwoParam::TwoParam(Rational t, Rational z) : theta(std::move(t)), zeta(std::move(z)) {
  if (theta.sign() <= 0 || zeta.sign() <= 0)
    throw std::domain_error("two-parameter family needs theta > 0 and zeta > 0");
}

Rational GeneralParams::alpha_at(Value k) const {
  if (k == 0) throw std::invalid_argument("alpha_0 is not a model parameter");
  auto it = alpha.find(k);
  return it == alpha.end() ? alpha_tail : it->second;
}

bool GeneralParams::all_alpha_zero() const {
  if (!alpha_tail.is_zero()) return false;
  for (const auto& [k, v] : alpha)
    if (!v.is_zero()) return false;
  return true;
}

namespace {

// Positivity of theta + alpha_{-1} + ... + alpha_{-l} for every l, checked
// through the listed entries and then analytically along the constant tail.
void check_side(const Rational& base, const GeneralParams& params, int direction) {
  Value far = 0;
  for (const auto& [k, v] : params.alpha)
    if ((direction < 0 && k < 0) || (direction > 0 && k > 0))
      far = std::max<Value>(far, k < 0 ? -k : k);
  Rational sum = base;
  for (Value i = 1; i <= far; ++i) {
    sum += params.alpha_at(direction < 0 ? -i : i);
    if (sum.sign() <= 0)
      throw std::domain_error("prefix sum of record weights is not positive");
  }
  if (params.alpha_tail.sign() < 0)
    throw std::domain_error("negative alpha tail leaves the principal domain eventually");
}

}  // namespace

void validate_principal(const GeneralParams& params) {
  for (const auto& [k, v] : params.alpha) {
    if (k == 0) throw std::domain_error("alpha_0 must not be specified");
    if (Rational(1) - v <= Rational(0))
      throw std::domain_error("principal domain needs 1 - alpha_k > 0");
  }
  if (Rational(1) - params.alpha_tail <= Rational(0))
    throw std::domain_error("principal domain needs 1 - alpha_k > 0 (tail)");
  if (params.theta.sign() <= 0 || params.zeta.sign() <= 0)
    throw std::domain_error("principal domain needs theta > 0 and zeta > 0");
  check_side(params.theta, params, -1);
  check_side(params.zeta, params, +1);
}

GeneralParams general_from(const TwoParam& params) {
  GeneralParams out;
  out.theta = params.theta;
  out.zeta = params.zeta;
  out.alpha_tail = Rational(0);
  return out;
}

LimitFamily::LimitFamily(LimitKind k, Rational param) : kind(k), parameter(std::move(param)) {
  if (kind == LimitKind::kBernoulliPyramid || kind == LimitKind::kSingleRecord) {
    if (parameter < Rational(0) || parameter > Rational(1))
      throw std::invalid_argument("pyramid/single-record parameter must lie in [0,1]");
  } else if (parameter.sign() <= 0) {
    throw std::invalid_argument("degenerate Ewens parameter must be positive");
  }
}

GeneralParams parse_alpha_spec(const Rational& theta, const Rational& zeta,
                               const std::string& spec) {
  GeneralParams out;
  out.theta = theta;
  out.zeta = zeta;
  out.alpha_tail = Rational(0);
  if (spec.empty()) return out;

  std::string entries = spec;
  auto semi = spec.find(';');
  if (semi != std::string::npos) {
    entries = spec.substr(0, semi);
    std::string tail_clause = spec.substr(semi + 1);
    auto colon = tail_clause.find(':');
    if (colon == std::string::npos || tail_clause.substr(0, colon) != "tail")
      throw std::invalid_argument("alpha spec tail clause must be 'tail:<rational>'");
    out.alpha_tail = Rational::parse(tail_clause.substr(colon + 1));
  }
  std::istringstream is(entries);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("alpha entry must be 'k:<rational>'");
    Value k = std::stoll(item.substr(0, colon));
    if (k == 0) throw std::invalid_argument("alpha_0 must not be specified");
    out.alpha[k] = Rational::parse(item.substr(colon + 1));
  }
  return out;
}

}  // namespace recperm
