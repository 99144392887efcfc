#pragma once

// Independent reference values for the tests.  Nothing here calls into the
// library: closed formulas and direct enumeration only.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracles {

using Weight = std::vector<int>;
using Character = std::map<Weight, std::int64_t>;

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int lie_dimension(char type, int n) {
  switch (type) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::invalid_argument("type");
}

inline int positive_roots(char type, int n) { return (lie_dimension(type, n) - n) / 2; }

inline std::int64_t weyl_order(char type, int n) {
  switch (type) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::int64_t{1} << n) * factorial(n);
    case 'D': return (std::int64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::invalid_argument("type");
}

// sl_{n+1}: prod_{i<j} (lambda_i + ... + lambda_{j-1} + j - i) / (j - i).
inline std::int64_t sl_dimension(const Weight& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::int64_t num = 1, den = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int s = j - i;
      for (int k = i; k < j; ++k) s += lambda[k];
      num *= s;
      den *= j - i;
      const std::int64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  return num / den;
}

// Weight of e_{s_1} ^ ... ^ e_{s_i} in sl_{n+1}: coordinates x_k - x_{k+1}
// where x is the indicator of the subset.
inline Character exterior_power(int n, int i) {
  Character ch;
  const int size = n + 1;
  for (int mask = 0; mask < (1 << size); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != i) continue;
    Weight w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[k] = ((mask >> k) & 1) - ((mask >> (k + 1)) & 1);
    ++ch[w];
  }
  return ch;
}

inline Character product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Weight w(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] + v[k];
      out[w] += x * y;
    }
  return out;
}

inline Character power(const Character& a, int k) {
  Character out{{Weight(a.begin()->first.size(), 0), 1}};
  for (int i = 0; i < k; ++i) out = product(out, a);
  return out;
}

inline std::int64_t dimension(const Character& ch) {
  std::int64_t d = 0;
  for (const auto& [w, m] : ch) d += m;
  return d;
}

// sl2 irreducible V(n): weights n, n-2, ..., -n.
inline Character sl2_irrep(int n) {
  Character ch;
  for (int k = -n; k <= n; k += 2) ch[{k}] = 1;
  return ch;
}

}  // namespace oracles
