#include "recperm/counts.hpp"

#include <stdexcept>
#include <vector>

#include "recperm/enumerate.hpp"

namespace recperm {

BigCount factorial(Value n) {
  BigCount out(1);
  for (Value i = 2; i <= n; ++i) out *= BigCount(static_cast<std::uint64_t>(i));
  return out;
}

BigCount binomial(Value n, Value k) {
  if (k < 0 || k > n) return BigCount();
  if (k > n - k) k = n - k;
  BigCount out(1);
  for (Value i = 1; i <= k; ++i) {
    out *= BigCount(static_cast<std::uint64_t>(n - k + i));
    out = out / BigCount(static_cast<std::uint64_t>(i));
  }
  return out;
}

BigCount stirling1(Value n, Value r) {
  if (n < 0 || r < 0 || r > n) return BigCount();
  if (n == 0) return r == 0 ? BigCount(1) : BigCount();
  // s(n,r) = s(n-1,r-1) + (n-1) s(n-1,r)
  std::vector<BigCount> row(1, BigCount(1));  // row for n = 0
  for (Value m = 1; m <= n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m + 1));
    for (Value j = 0; j <= m; ++j) {
      BigCount acc;
      if (j >= 1) acc += row[static_cast<std::size_t>(j - 1)];
      if (j < m) acc += BigCount(static_cast<std::uint64_t>(m - 1)) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = std::move(acc);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

BigCount record_stirling(Value n, Value l, Value u) {
  if (n < 1 || l < 0 || u < 0 || l + u > n - 1) return BigCount();
  if (n == 1) return (l == 0 && u == 0) ? BigCount(1) : BigCount();
  // iterate the recursion level by level; level m holds c(m, a, b)
  std::vector<std::vector<BigCount>> cur(1, std::vector<BigCount>(1, BigCount(1)));
  for (Value m = 2; m <= n; ++m) {
    std::vector<std::vector<BigCount>> next(
        static_cast<std::size_t>(m),
        std::vector<BigCount>(static_cast<std::size_t>(m)));
    for (Value a = 0; a <= m - 1; ++a) {
      for (Value b = 0; a + b <= m - 1; ++b) {
        BigCount acc;
        if (a >= 1 && a - 1 + b <= m - 2) acc += cur[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
        if (b >= 1 && a + b - 1 <= m - 2) acc += cur[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)];
        if (a + b <= m - 2 && m >= 2)
          acc += BigCount(static_cast<std::uint64_t>(m - 2)) * cur[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        next[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(acc);
      }
    }
    cur = std::move(next);
  }
  return cur[static_cast<std::size_t>(l)][static_cast<std::size_t>(u)];
}

BigCount record_stirling_via_identity(Value n, Value l, Value u) {
  if (n < 1 || l < 0 || u < 0) return BigCount();
  if (n == 1) return (l == 0 && u == 0) ? BigCount(1) : BigCount();
  return stirling1(n - 1, l + u) * binomial(l + u, l);
}

bool check_generating_function(Value n, const TwoParam& params) {
  if (n < 1) throw std::invalid_argument("generating function needs n >= 1");
  Rational sum(0);
  for (Value l = 0; l <= n - 1; ++l)
    for (Value u = 0; l + u <= n - 1; ++u) {
      BigCount c = record_stirling(n, l, u);
      if (c.is_zero()) continue;
      sum += Rational(BigInt(c)) * pow(params.theta, l) * pow(params.zeta, u);
    }
  return sum == rising_factorial(params.theta + params.zeta, n - 1);
}

BigCount extension_count(Value n, Value l, Value u, Value n2, Value l2, Value u2) {
  if (n < 1 || n2 < n) throw std::invalid_argument("extension_count needs 1 <= n <= n2");
  if (n2 > 60) throw ResourceError("extension_count capped at n2 = 60");
  if (l < 0 || u < 0 || l2 < 0 || u2 < 0) return BigCount();
  // E_m(a,b): permutations of [m] with counts (a,b) whose n-prefix has (l,u)
  std::vector<std::vector<BigCount>> cur(
      static_cast<std::size_t>(n2 + 1),
      std::vector<BigCount>(static_cast<std::size_t>(n2 + 1)));
  BigCount start = record_stirling(n, l, u);
  if (start.is_zero()) return BigCount();
  cur[static_cast<std::size_t>(l)][static_cast<std::size_t>(u)] = start;
  for (Value m = n; m < n2; ++m) {
    std::vector<std::vector<BigCount>> next(
        static_cast<std::size_t>(n2 + 1),
        std::vector<BigCount>(static_cast<std::size_t>(n2 + 1)));
    for (Value a = 0; a <= m; ++a)
      for (Value b = 0; a + b <= m; ++b) {
        const BigCount& v = cur[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (v.is_zero()) continue;
        next[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b)] += v;
        next[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)] += v;
        if (m >= 1)
          next[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
              BigCount(static_cast<std::uint64_t>(m - 1)) * v;
      }
    cur = std::move(next);
  }
  if (l2 > n2 || u2 > n2) return BigCount();
  return cur[static_cast<std::size_t>(l2)][static_cast<std::size_t>(u2)];
}

}  // namespace recperm
