#pragma once

// Reference computations used only by the tests. They share no code with
// krv::core beyond the Int type, and favour brute force over speed.

#include <krv/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using krv::Int;

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// binom(m + p, m) as a polynomial in m, i.e. (p+1)(p+2)...(p+m)/m!.
inline Int binomial_ext(int m, long p) {
  Int num = 1;
  Int den = 1;
  for (int i = 1; i <= m; ++i) {
    num *= p + i;
    den *= i;
  }
  return num / den;
}

/// Gaussian binomial [n, k]_q as coefficients in q, by the
/// q-Pascal rule [n, k] = [n-1, k-1] + q^k [n-1, k].
inline std::vector<Int> gaussian(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<std::vector<Int>>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[i].resize(static_cast<std::size_t>(i + 1));
    t[i][0] = {1};
    t[i][i] = {1};
    for (int j = 1; j < i; ++j) {
      const auto& a = t[i - 1][j - 1];
      const auto& b = t[i - 1][j];
      std::vector<Int> c(std::max(a.size(), b.size() + j));
      for (std::size_t e = 0; e < a.size(); ++e) c[e] += a[e];
      for (std::size_t e = 0; e < b.size(); ++e) c[e + j] += b[e];
      t[i][j] = c;
    }
  }
  return t[n][k];
}

/// x_n with x_0 = 1, x_1 = x from the closed Chebyshev sum
/// sum_k (-1)^k binom(n-k, k) x^{n-2k}. Index = exponent of x.
inline std::vector<Int> chebyshev(int n) {
  std::vector<Int> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; 2 * k <= n; ++k) c[n - 2 * k] = (k % 2 ? -1 : 1) * binomial(n - k, k);
  return c;
}

// ---------------------------------------------------------------------------
// sl_{r+1} via semistandard tableaux. Weights are GL contents of length r+1.

using Content = std::vector<int>;
using GlCharacter = std::map<Content, Int>;

namespace detail {

inline void fill(const std::vector<int>& shape, int letters, std::vector<std::vector<int>>& t, std::size_t row,
                 std::size_t col, Content& content, GlCharacter& out) {
  if (row == shape.size()) {
    out[content] += 1;
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    fill(shape, letters, t, row + 1, 0, content, out);
    return;
  }
  int lo = col > 0 ? t[row][col - 1] : 0;
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v < letters; ++v) {
    t[row][col] = v;
    ++content[v];
    fill(shape, letters, t, row, col + 1, content, out);
    --content[v];
  }
}

}  // namespace detail

/// Character of the sl_{r+1} irreducible with partition `shape`.
inline GlCharacter schur(const std::vector<int>& shape, int letters) {
  GlCharacter out;
  if (static_cast<int>(shape.size()) > letters) return out;
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  Content content(static_cast<std::size_t>(letters), 0);
  detail::fill(shape, letters, t, 0, 0, content, out);
  return out;
}

/// Partition of the highest weight sum lambda_a omega_a in rank r.
inline std::vector<int> partition_of(const std::vector<int>& lambda) {
  std::vector<int> p(lambda.size(), 0);
  int acc = 0;
  for (std::size_t a = lambda.size(); a-- > 0;) {
    acc += lambda[a];
    p[a] = acc;
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline GlCharacter multiply(const GlCharacter& a, const GlCharacter& b) {
  GlCharacter out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Content w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out[w] += ca * cb;
    }
  return out;
}

/// Multiplicity of the irreducible `shape` in chi by the Weyl alternation:
/// sum over permutations of sign(w) * chi[w(shape + rho) - rho].
inline Int alternating_multiplicity(const GlCharacter& chi, std::vector<int> shape, int letters) {
  shape.resize(static_cast<std::size_t>(letters), 0);
  const int total = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> perm(static_cast<std::size_t>(letters));
  std::iota(perm.begin(), perm.end(), 0);
  Int result = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < letters; ++i)
      for (int j = i + 1; j < letters; ++j) inversions += perm[i] > perm[j];
    Content w(static_cast<std::size_t>(letters));
    bool valid = true;
    int sum = 0;
    for (int i = 0; i < letters && valid; ++i) {
      const int src = perm[i];
      w[i] = shape[src] + (letters - 1 - src) - (letters - 1 - i);
      valid = w[i] >= 0;
      sum += w[i];
    }
    if (!valid || sum != total) continue;
    auto it = chi.find(w);
    if (it != chi.end()) result += (inversions % 2 ? -1 : 1) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

/// Multiplicity of V(lambda) in the tensor product of rectangles
/// (j^a) over the listed (a, j) pairs, with a 1-based.
inline Int rectangle_tensor_multiplicity(int rank, const std::vector<std::pair<int, int>>& factors,
                                         const std::vector<int>& lambda) {
  const int letters = rank + 1;
  GlCharacter chi{{Content(static_cast<std::size_t>(letters), 0), 1}};
  int boxes = 0;
  for (const auto& [a, j] : factors) {
    chi = multiply(chi, schur(std::vector<int>(static_cast<std::size_t>(a), j), letters));
    boxes += a * j;
  }
  // lambda is only defined modulo full columns; pad it to the same box count
  auto shape = partition_of(lambda);
  int have = std::accumulate(shape.begin(), shape.end(), 0);
  if ((boxes - have) % letters != 0 || boxes < have) return 0;
  const int columns = (boxes - have) / letters;
  shape.resize(static_cast<std::size_t>(letters), 0);
  for (auto& s : shape) s += columns;
  return alternating_multiplicity(chi, shape, letters);
}

/// Hook-content dimension of the sl_{r+1} irreducible with the given partition.
inline Int hook_content_dim(const std::vector<int>& shape, int letters) {
  Int num = 1;
  Int den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      num *= letters + j - static_cast<int>(i);
      int arm = shape[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

// ---------------------------------------------------------------------------
// A1 fermionic sums written out directly from the definitions.

struct A1Sums {
  std::map<long, Int> m;  // twice the q-exponent -> coefficient
  std::map<long, Int> n;
};

namespace detail {

inline void partitions(int total, int max_part, std::vector<int>& counts, const std::function<void()>& visit) {
  if (total == 0) {
    visit();
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    ++counts[static_cast<std::size_t>(part)];
    partitions(total - part, part, counts, visit);
    --counts[static_cast<std::size_t>(part)];
  }
}

/// Coefficients of [m+p, m]_q for any integer p, as half-exponent -> coefficient,
/// using the product formula prod_{i=1..m} (1 - q^{p+i}) / (1 - q^i) when p < 0.
inline std::map<long, Int> qbinom_half(int m, long p) {
  std::map<long, Int> out;
  if (m == 0) {
    out[0] = 1;
    return out;
  }
  if (p >= 0) {
    const auto g = gaussian(static_cast<int>(m + p), m);
    for (std::size_t e = 0; e < g.size(); ++e)
      if (g[e] != 0) out[2 * static_cast<long>(e)] = g[e];
    return out;
  }
  if (p + m >= 0 && p + m < m) return out;  // a factor (1 - q^0) in the numerator
  // p + m < 0: q^{-(stuff)} times a Gaussian binomial in q^{-1}, up to sign
  // [m+p, m] with p < -m equals (-1)^m q^{m(2p+m+1)/2} [-p-1, m]
  const auto g = gaussian(static_cast<int>(-p - 1), m);
  const long shift = static_cast<long>(m) * (2 * p + m + 1);  // twice the exponent
  const int sign = m % 2 ? -1 : 1;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (g[e] != 0) out[shift + 2 * static_cast<long>(e)] = sign * g[e];
  return out;
}

}  // namespace detail

/// M and N for sl_2 with lambda = l omega and n[j-1] = n_j. The grading is
/// 2Q = sum_i m_i P_i, or 2Q = sum_{i,j} 2 min(i,j) m_i m_j when `cocharge`.
/// A positive `max_part` drops configurations with longer strings.
inline A1Sums a1_sums(int l, const std::vector<int>& n, bool cocharge, int max_part = 0) {
  A1Sums out;
  long top = 0;
  for (std::size_t j = 0; j < n.size(); ++j) top += static_cast<long>(j + 1) * n[j];
  if (top < l || (top - l) % 2 != 0) return out;
  const int total = static_cast<int>((top - l) / 2);
  std::vector<int> counts(static_cast<std::size_t>(total + 1), 0);
  detail::partitions(total, max_part > 0 ? max_part : std::max(total, 1), counts, [&] {
    const int longest = total;
    std::vector<long> vac(static_cast<std::size_t>(longest + 1), 0);
    for (int i = 1; i <= longest; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < n.size(); ++j) p += static_cast<long>(std::min<long>(i, j + 1)) * n[j];
      for (int j = 1; j <= longest; ++j) p -= 2L * std::min(i, j) * counts[static_cast<std::size_t>(j)];
      vac[static_cast<std::size_t>(i)] = p;
    }
    long twice_q = 0;
    for (int i = 1; i <= longest; ++i) {
      const long mi = counts[static_cast<std::size_t>(i)];
      if (cocharge) {
        for (int j = 1; j <= longest; ++j) twice_q += 2L * std::min(i, j) * mi * counts[static_cast<std::size_t>(j)];
      } else {
        twice_q += mi * vac[static_cast<std::size_t>(i)];
      }
    }
    std::map<long, Int> term{{twice_q, 1}};
    bool restricted = true;
    for (int i = 1; i <= longest; ++i) {
      if (vac[static_cast<std::size_t>(i)] < 0) restricted = false;
      const auto b = detail::qbinom_half(counts[static_cast<std::size_t>(i)], vac[static_cast<std::size_t>(i)]);
      std::map<long, Int> next;
      for (const auto& [e1, c1] : term)
        for (const auto& [e2, c2] : b) next[e1 + e2] += c1 * c2;
      term = std::move(next);
    }
    for (const auto& [e, c] : term) {
      out.n[e] += c;
      if (restricted) out.m[e] += c;
    }
  });
  for (auto* side : {&out.m, &out.n})
    for (auto it = side->begin(); it != side->end();) it = it->second == 0 ? side->erase(it) : std::next(it);
  return out;
}

}  // namespace oracle
