#include "recperm/poset.hpp"

#include <stdexcept>

namespace recperm {

namespace {

BigCount exact_quotient(const BigCount& num, const BigCount& den) {
  BigCount q, r;
  BigCount::divmod(num, den, q, r);
  if (!r.is_zero()) throw std::logic_error("expected exact division");
  return q;
}

}  // namespace

BigCount d_count(const CenteredComposition& composition) {
  composition.validate();
  const Value n = composition.degree();
  BigCount den(1);
  for (Value k = -composition.lower_count; k <= composition.upper_count(); ++k) {
    if (k == 0) continue;
    den *= BigCount(static_cast<std::uint64_t>(composition.tail_sum(k)));
  }
  return exact_quotient(factorial(n - 1), den);
}

bool extends(const CenteredComposition& lambda, const CenteredComposition& mu) {
  if (mu.lower_count < lambda.lower_count) return false;
  if (mu.upper_count() < lambda.upper_count()) return false;
  for (Value k = -lambda.lower_count; k <= lambda.upper_count(); ++k)
    if (mu.part_at(k) < lambda.part_at(k)) return false;
  return true;
}

BigCount d_ext(const CenteredComposition& lambda, const CenteredComposition& mu) {
  lambda.validate();
  mu.validate();
  if (!extends(lambda, mu))
    throw std::invalid_argument("mu does not extend lambda in the composition order");
  const Value n = lambda.degree();
  const Value m = mu.degree();
  BigCount num = factorial(m - n);
  for (Value k = -lambda.lower_count; k <= lambda.upper_count(); ++k)
    num *= binomial(mu.part_at(k) - 1, lambda.part_at(k) - 1);
  BigCount den(1);
  for (Value k = -mu.lower_count; k < -lambda.lower_count; ++k)
    den *= BigCount(static_cast<std::uint64_t>(mu.tail_sum(k)));
  for (Value k = lambda.upper_count() + 1; k <= mu.upper_count(); ++k)
    den *= BigCount(static_cast<std::uint64_t>(mu.tail_sum(k)));
  return exact_quotient(num, den);
}

Rational martin_ratio(const CenteredComposition& lambda, const CenteredComposition& mu) {
  lambda.validate();
  mu.validate();
  if (!extends(lambda, mu))
    throw std::invalid_argument("mu does not extend lambda in the composition order");
  const Value n = lambda.degree();
  const Value m = mu.degree();
  Rational out(1);
  for (Value k = -lambda.lower_count; k <= lambda.upper_count(); ++k) {
    if (k == 0) continue;
    out *= Rational(mu.tail_sum(k));
  }
  out /= falling_factorial(Rational(m - 1), n - 1);
  for (Value k = -lambda.lower_count; k <= lambda.upper_count(); ++k) {
    const Value lk = lambda.part_at(k);
    out *= falling_factorial(Rational(mu.part_at(k) - 1), lk - 1);
    out /= Rational(BigInt(factorial(lk - 1)));
  }
  return out;
}

std::vector<CenteredComposition> followers(const CenteredComposition& composition) {
  composition.validate();
  std::vector<CenteredComposition> out;
  {
    CenteredComposition c = composition;
    c.parts.insert(c.parts.begin(), 1);
    c.lower_count += 1;
    out.push_back(std::move(c));
  }
  for (Value k = -composition.lower_count; k <= composition.upper_count(); ++k) {
    if (k == 0) continue;
    CenteredComposition c = composition;
    c.parts[static_cast<std::size_t>(k + c.lower_count)] += 1;
    out.push_back(std::move(c));
  }
  {
    CenteredComposition c = composition;
    c.parts.push_back(1);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

void positive_compositions_rec(Value remaining, std::vector<Value>& cur,
                               std::vector<std::vector<Value>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (Value part = 1; part <= remaining; ++part) {
    cur.push_back(part);
    positive_compositions_rec(remaining - part, cur, out);
    cur.pop_back();
  }
}

// All compositions of total into positive parts, the empty composition for 0.
void positive_compositions(Value total, std::vector<std::vector<Value>>& out) {
  out.clear();
  std::vector<Value> cur;
  positive_compositions_rec(total, cur, out);
}

}  // namespace

std::vector<CenteredComposition> enumerate_compositions(Value n) {
  if (n < 1) throw std::invalid_argument("compositions need n >= 1");
  std::vector<CenteredComposition> out;
  std::vector<std::vector<Value>> left, right;
  for (Value lsum = 0; lsum <= n - 1; ++lsum) {
    const Value rsum = n - 1 - lsum;
    positive_compositions(lsum, left);
    positive_compositions(rsum, right);
    for (const auto& lparts : left)
      for (const auto& rparts : right) {
        CenteredComposition c;
        c.parts = lparts;
        c.parts.push_back(1);
        c.parts.insert(c.parts.end(), rparts.begin(), rparts.end());
        c.lower_count = static_cast<Value>(lparts.size());
        out.push_back(std::move(c));
      }
  }
  return out;
}

BigCount composition_count(Value n) {
  return BigCount(static_cast<std::uint64_t>(enumerate_compositions(n).size()));
}

namespace {

template <typename Real>
Real phi_impl(const CenteredComposition& composition, const std::vector<Real>& rho,
              Value center_index, const Real& one) {
  composition.validate();
  const Value l = composition.lower_count;
  const Value u = composition.upper_count();
  const Value kmin = -center_index;
  const Value kmax = static_cast<Value>(rho.size()) - 1 - center_index;
  if (-l < kmin || u > kmax)
    throw TruncationError("composition needs shape entries beyond the truncation");
  auto at = [&](Value k) -> const Real& {
    return rho[static_cast<std::size_t>(k + center_index)];
  };
  Real out = one;
  for (Value k = -l; k <= -1; ++k) {
    out = out * at(k + 1);
    const Real gap = at(k + 1) - at(k);
    // the i-th middle of a block lands in one of i equal-weight slots
    for (Value i = 1; i < composition.part_at(k); ++i) out = out * gap / Real(i);
  }
  for (Value k = 1; k <= u; ++k) {
    out = out * (one - at(k - 1));
    const Real gap = at(k) - at(k - 1);
    for (Value i = 1; i < composition.part_at(k); ++i) out = out * gap / Real(i);
  }
  return out;
}

}  // namespace

double phi_boundary(const CenteredComposition& composition, const std::vector<double>& rho,
                    Value center_index) {
  return phi_impl<double>(composition, rho, center_index, 1.0);
}

Rational phi_boundary_exact(const CenteredComposition& composition,
                            const std::vector<Rational>& rho, Value center_index) {
  return phi_impl<Rational>(composition, rho, center_index, Rational(1));
}

}  // namespace recperm
