// Brute-force reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kerovlab/ncpart.hpp"
#include "kerovlab/partition.hpp"
#include "kerovlab/rational.hpp"

namespace oracle {

using kerovlab::Block;
using kerovlab::IntegerPartition;
using kerovlab::Integer;
using kerovlab::Rational;

// Every set partition of {1..n}, blocks listed by minimum.
inline std::vector<std::vector<Block>> set_partitions(int n) {
  std::vector<std::vector<Block>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<Block> blocks(static_cast<std::size_t>(used));
      for (int j = 0; j < n; ++j) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j + 1);
      out.push_back(blocks);
      return;
    }
    for (int b = 0; b <= used && (i > 0 || b == 0); ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return {{}};
  rec(0, 0);
  return out;
}

inline bool crossing(const std::vector<Block>& blocks) {
  std::map<int, int> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) owner[x] = static_cast<int>(b);
  std::vector<int> pts;
  for (auto& [x, b] : owner) pts.push_back(x);
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const int oa = owner[pts[a]], ob = owner[pts[b]];
          if (oa == owner[pts[c]] && ob == owner[pts[d]] && oa != ob) return true;
        }
  return false;
}

inline std::vector<std::vector<Block>> noncrossing(int n) {
  std::vector<std::vector<Block>> out;
  for (auto& p : set_partitions(n))
    if (!crossing(p)) out.push_back(p);
  return out;
}

inline bool same_block(const std::vector<Block>& blocks, int a, int b) {
  for (const auto& B : blocks) {
    const bool ha = std::find(B.begin(), B.end(), a) != B.end();
    const bool hb = std::find(B.begin(), B.end(), b) != B.end();
    if (ha || hb) return ha && hb;
  }
  return false;
}

inline IntegerPartition type(const std::vector<Block>& blocks) {
  std::vector<int> parts;
  for (const auto& b : blocks) parts.push_back(static_cast<int>(b.size()));
  return IntegerPartition(parts);
}

inline bool refines(const std::vector<Block>& fine, const std::vector<Block>& coarse) {
  for (const auto& b : fine)
    for (int x : b)
      if (!same_block(coarse, b.front(), x)) return false;
  return true;
}

// tau <=^irr pi straight from the definition: refinement, and tau restricted
// to each block of pi keeps the block's extremes together.
inline bool leq_irr(const std::vector<Block>& tau, const std::vector<Block>& pi) {
  if (!refines(tau, pi)) return false;
  for (const auto& B : pi) {
    const auto [lo, hi] = std::minmax_element(B.begin(), B.end());
    if (!same_block(tau, *lo, *hi)) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Rational pow0(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// (1/k!) sum over S_k of prod_i x_{w(i)-1}^{|A_i|}, A_i the blocks of pi on
// the singletons of tau (padded with empty blocks).
inline Rational weight_W_direct(const std::vector<Block>& tau, const std::vector<Block>& pi,
                                const std::vector<Rational>& xs) {
  std::set<int> singles;
  for (const auto& b : tau)
    if (b.size() == 1) singles.insert(b.front());
  std::vector<int> sizes;
  for (const auto& B : pi) {
    int c = 0;
    for (int x : B) c += static_cast<int>(singles.count(x));
    if (c > 0) sizes.push_back(c);
  }
  const int k = static_cast<int>(xs.size());
  Rational total = 0;
  Integer count = 0;
  for (const auto& w : permutations(k)) {
    Rational term = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) term *= pow0(xs[static_cast<std::size_t>(w[i] - 1)], sizes[i]);
    total += term;
    ++count;
  }
  return total / Rational(count);
}

inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// Bialternant: s_lambda(xs) = det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}).
// Needs distinct points and at least l(lambda) of them.
inline Rational schur_bialternant(const IntegerPartition& lambda, const std::vector<Rational>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int part = static_cast<int>(j) < lambda.length() ? lambda[static_cast<int>(j)] : 0;
      num[i][j] = pow0(xs[i], part + static_cast<int>(n - 1 - j));
      den[i][j] = pow0(xs[i], static_cast<int>(n - 1 - j));
    }
  return det(num) / det(den);
}

inline Rational power_sum(int r, const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += pow0(x, r);
  return s;
}

// e_r and h_r by subset / multiset enumeration.
inline Rational elementary(int r, const std::vector<Rational>& xs) {
  const int n = static_cast<int>(xs.size());
  Rational s = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    Rational t = 1;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) t *= xs[static_cast<std::size_t>(i)];
    s += t;
  }
  return s;
}

inline Rational complete(int r, const std::vector<Rational>& xs, std::size_t from = 0) {
  if (r == 0) return 1;
  Rational s = 0;
  for (std::size_t i = from; i < xs.size(); ++i) s += xs[i] * complete(r - 1, xs, i);
  return s;
}

template <class F>
Rational product_over_parts(const IntegerPartition& lambda, F single) {
  Rational r = 1;
  for (int part : lambda.parts()) r *= single(part);
  return r;
}

inline std::vector<Rational> random_points(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> xs;
  std::set<Rational> seen;
  while (static_cast<int>(xs.size()) < n) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (seen.insert(q).second) xs.push_back(q);
  }
  return xs;
}

inline Integer catalan(int n) {
  // C_n = C(2n, n) / (n + 1) through a running product.
  Integer c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace oracle
