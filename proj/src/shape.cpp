#include "recperm/shape.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace recperm {

double TwoSidedShape::gap(Value k) const {
  if (k == 0) throw std::invalid_argument("the center block has no gap");
  return k > 0 ? rho_at(k) - rho_at(k - 1) : rho_at(k + 1) - rho_at(k);
}

void TwoSidedShape::validate() const {
  if (rho.empty() || center_index < 0 || center_index >= static_cast<Value>(rho.size()))
    throw std::invalid_argument("shape needs entries and a center inside them");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0.0 && rho[i] <= 1.0))
      throw std::invalid_argument("shape entries must lie in [0,1]");
    if (i > 0 && rho[i] < rho[i - 1])
      throw std::invalid_argument("shape entries must be nondecreasing");
  }
}

void RationalShape::validate() const {
  if (rho.empty() || center_index < 0 || center_index >= static_cast<Value>(rho.size()))
    throw std::invalid_argument("shape needs entries and a center inside them");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] < Rational(0) || rho[i] > Rational(1))
      throw std::invalid_argument("shape entries must lie in [0,1]");
    if (i > 0 && rho[i] < rho[i - 1])
      throw std::invalid_argument("shape entries must be nondecreasing");
  }
}

TwoSidedShape RationalShape::to_real() const {
  TwoSidedShape out;
  out.center_index = center_index;
  out.rho.reserve(rho.size());
  for (const Rational& r : rho) out.rho.push_back(r.to_double());
  return out;
}

TwoSidedShape sample_shape(const GeneralParams& params, Value truncation, Rng& rng) {
  if (truncation < 1) throw std::invalid_argument("shape truncation must be >= 1");
  validate_principal(params);
  TwoSidedShape out;
  out.center_index = truncation;
  out.rho.assign(static_cast<std::size_t>(2 * truncation + 1), 0.0);
  const double rho0 = rng.next_beta(params.theta.to_double(), params.zeta.to_double());
  out.rho[static_cast<std::size_t>(truncation)] = rho0;
  double cur = rho0;
  double a_sum = 0.0;
  for (Value j = 1; j <= truncation; ++j) {
    const double aj = params.alpha_at(-j).to_double();
    a_sum += aj;
    const double t = rng.next_beta(params.theta.to_double() + a_sum, 1.0 - aj);
    cur *= t;
    out.rho[static_cast<std::size_t>(truncation - j)] = cur;
  }
  cur = rho0;
  a_sum = 0.0;
  for (Value j = 1; j <= truncation; ++j) {
    const double aj = params.alpha_at(j).to_double();
    a_sum += aj;
    const double z = rng.next_beta(params.zeta.to_double() + a_sum, 1.0 - aj);
    cur = 1.0 - (1.0 - cur) * z;
    out.rho[static_cast<std::size_t>(truncation + j)] = cur;
  }
  out.validate();
  return out;
}

TwoSidedShape sample_shape(const TwoParam& params, Value truncation, Rng& rng) {
  return sample_shape(general_from(params), truncation, rng);
}

TwoSidedShape sample_shape(const GeneralParams& params, Value truncation, std::uint64_t seed) {
  Rng rng(seed);
  return sample_shape(params, truncation, rng);
}

TwoSidedShape sample_shape(const TwoParam& params, Value truncation, std::uint64_t seed) {
  Rng rng(seed);
  return sample_shape(params, truncation, rng);
}

TwoSidedShape shape_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TwoSidedShape out;
  out.rho = j.at("rho").get<std::vector<double>>();
  out.center_index = j.at("center_index").get<Value>();
  out.validate();
  return out;
}

std::string shape_to_json(const TwoSidedShape& shape) {
  nlohmann::json j;
  j["rho"] = shape.rho;
  j["center_index"] = shape.center_index;
  return j.dump();
}

TwoSidedShape read_shape_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open shape file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return shape_from_json(buf.str());
}

}  // namespace recperm
