#pragma once

// Reference implementations used only by the tests. None of them call the
// code paths they are compared against.

#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "skein/matching.hpp"
#include "skein/rational_fn.hpp"

namespace testing_support {

using skein::Integer;
using skein::LaurentPoly;
using skein::RationalFn;

/// Sparse polynomial with schoolbook arithmetic.
using NaivePoly = std::map<int, Integer>;

inline NaivePoly naive(const LaurentPoly& p) {
  NaivePoly out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

inline void prune(NaivePoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b, int sign = 1) {
  NaivePoly out = a;
  for (const auto& [e, c] : b) out[e] += sign * c;
  prune(out);
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  prune(out);
  return out;
}

/// x == num/den, tested by cross multiplication.
inline bool same_fraction(const RationalFn& x, const LaurentPoly& num, const LaurentPoly& den) {
  return naive_mul(naive(x.num()), naive(den)) == naive_mul(naive(x.den()), naive(num));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo = -20, int hi = 20, long bound = 1000000,
                               int max_terms = 6) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::uniform_int_distribution<int> count(0, max_terms);
  LaurentPoly p;
  const int k = count(rng);
  for (int j = 0; j < k; ++j) p += LaurentPoly::monomial(Integer(coef(rng)), exp(rng));
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int lo = -6, int hi = 6, long bound = 9,
                                       int max_terms = 4) {
  LaurentPoly p;
  while (p.is_zero()) p = random_poly(rng, lo, hi, bound, max_terms);
  return p;
}

/// Circular position of a boundary point: bottom left to right, then top
/// right to left.
inline int circular(int m, int p) { return p < m ? p : 3 * m - 1 - p; }

/// Every perfect matching of the 2m boundary points with no crossing chords,
/// by exhaustive search over all perfect matchings.
inline std::vector<std::vector<int>> brute_force_planar_pairings(int m) {
  const int n = 2 * m;
  std::vector<std::vector<int>> out;
  std::vector<int> pair(n, -1);
  auto crossing_free = [&] {
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) {
        const int x1 = circular(m, a), y1 = circular(m, pair[a]);
        const int x2 = circular(m, c), y2 = circular(m, pair[c]);
        if (x1 < x2 && x2 < y1 && y1 < y2) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    while (a < n && pair[a] != -1) ++a;
    if (a == n) {
      if (crossing_free()) out.push_back(pair);
      return;
    }
    for (int b = a + 1; b < n; ++b) {
      if (pair[b] != -1) continue;
      pair[a] = b;
      pair[b] = a;
      self(self);
      pair[a] = pair[b] = -1;
    }
  };
  rec(rec);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int sets() {
    int s = 0;
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) s += find(x) == x ? 1 : 0;
    return s;
  }
};

/// Loops in the annular closure of `above` stacked on `below`: each chord is
/// an edge between boundary points of its layer; middle points are shared,
/// and top of `above` is joined around the side to bottom of `below`.
inline int two_layer_closure_loops(const skein::Matching& above, const skein::Matching& below) {
  const int m = above.width();
  // Nodes: 0..m-1 bottom of below, m..2m-1 middle, 2m..3m-1 top of above.
  UnionFind uf(3 * m);
  for (int p = 0; p < 2 * m; ++p) {
    const int q = below.partner(p);
    uf.unite(p, q);  // below's points 0..2m-1 map to nodes 0..2m-1 directly
    const int r = above.partner(p);
    uf.unite(p + m, r + m);  // above's points shift by m
  }
  for (int j = 0; j < m; ++j) uf.unite(2 * m + j, j);
  return uf.sets();
}

}  // namespace testing_support
