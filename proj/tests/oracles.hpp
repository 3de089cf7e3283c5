#pragma once

// Slow reference implementations the library is checked against. None of
// them share code paths with the library beyond Rational arithmetic.

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "kappa/combinatorics.hpp"
#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"

namespace oracle {

using kappa::Integer;
using kappa::Rational;

inline Integer dfact(long k) {
  Integer r = 1;
  for (long i = k; i > 1; i -= 2) r *= i;
  return r;
}

// Plain DVV over labeled subsets with base cases <tau_0^3>_0 and <tau_1>_1.
inline Rational wk(int g, std::vector<int> a) {
  static std::map<std::pair<int, std::vector<int>>, Rational> memo;
  const long n = static_cast<long>(a.size());
  if (g < 0 || n == 0 || 2L * g - 2 + n <= 0) return 0;
  long sum = 0;
  for (int x : a) {
    if (x < 0) return 0;
    sum += x;
  }
  if (sum != 3L * g - 3 + n) return 0;
  std::sort(a.begin(), a.end(), std::greater<>());
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1) / 24;
  const auto key = std::make_pair(g, a);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = a[0] - 1;
  std::vector<int> rest(a.begin() + 1, a.end());
  Rational total = 0;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> e = rest;
    e[j] = k + rest[j];
    total += Rational(dfact(2L * (k + rest[j]) + 1)) / Rational(dfact(2L * rest[j] - 1)) * wk(g, e);
  }
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    std::vector<int> e = rest;
    e.push_back(r);
    e.push_back(s);
    Rational inner = wk(g - 1, e);
    const std::size_t m = rest.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> left{r}, right{s};
      for (std::size_t t = 0; t < m; ++t) ((mask >> t) & 1u ? left : right).push_back(rest[t]);
      for (int g1 = 0; g1 <= g; ++g1) inner += wk(g1, left) * wk(g - g1, right);
    }
    total += Rational(dfact(2L * r + 1) * dfact(2L * s + 1)) / 2 * inner;
  }
  total /= Rational(dfact(2L * k + 3));
  memo.emplace(key, total);
  return total;
}

// Sum over every function from parts to vertices, no grouping.
inline Rational pair(const kappa::Partition& p, const kappa::Profile& q) {
  const std::size_t k = p.parts.size(), v = q.vertices.size();
  std::vector<std::size_t> f(k, 0);
  Rational total = 0;
  while (true) {
    std::vector<int> load(v, 0);
    for (std::size_t t = 0; t < k; ++t) load[f[t]] += p.parts[t];
    bool fits = true;
    for (std::size_t i = 0; i < v; ++i) fits = fits && load[i] == std::max(q.vertices[i].dimension(), 0);
    if (fits) {
      Rational prod = 1;
      for (std::size_t i = 0; i < v; ++i) {
        std::vector<int> e;
        for (std::size_t t = 0; t < k; ++t)
          if (f[t] == i) e.push_back(p.parts[t] + 1);
        e.resize(e.size() + static_cast<std::size_t>(q.vertices[i].points), 0);
        prod *= wk(q.vertices[i].genus, e);
      }
      total += prod;
    }
    std::size_t t = 0;
    while (t < k && ++f[t] == v) f[t++] = 0;
    if (t == k) break;
  }
  return total;
}

// Cofactor determinant; fine up to 6x6.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
  }
  return det;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const kappa::RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s.push_back(i);
      out.push_back(s);
    }
    return out;
  };
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Rational>> sub;
        for (auto r : rs) {
          std::vector<Rational> row;
          for (auto c : cs) row.push_back(m(r, c));
          sub.push_back(std::move(row));
        }
        if (cofactor_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace oracle
