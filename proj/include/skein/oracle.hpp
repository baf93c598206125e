#pragma once

// Brute-force colored Kauffman bracket of a closed classical braid, written
// without the Temperley-Lieb machinery: each component is cabled through the
// Chebyshev expansion of the Jones-Wenzl closure, and each cabled diagram is
// evaluated by a state sum over its elementary crossings.

#include <numeric>
#include <string>
#include <vector>

#include "skein/laurent_poly.hpp"
#include "skein/singular.hpp"

namespace skein::oracle {

inline constexpr int kDefaultMaxCrossings = 24;

/// Coefficients of S_N(z): S_0 = 1, S_1 = z, S_N = z S_{N-1} - S_{N-2}.
inline std::vector<long> chebyshev(int N) {
  if (N < 0) throw IndexOutOfRange("chebyshev: negative degree");
  std::vector<long> prev{1};
  if (N == 0) return prev;
  std::vector<long> cur{0, 1};
  for (int k = 2; k <= N; ++k) {
    std::vector<long> next(k + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  int sets;
  explicit UnionFind(int n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --sets;
    }
  }
};

struct Crossing {
  int position;  // 0-based left strand
  int sign;      // +1 or -1
};

/// Bracket of the closure of a braid on `width` strands, with d = -A^2 - A^-2
/// per loop (the empty diagram counts 1).
inline LaurentPoly bracket(int width, const std::vector<Crossing>& crossings) {
  const int levels = static_cast<int>(crossings.size());
  if (width == 0) return 1;
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> dpow{LaurentPoly(1)};
  // Count states by (exponent of A, loops), then assemble.
  std::vector<std::vector<long>> counts;  // [loops][exponent + levels]
  const long states = 1L << levels;
  auto seg = [width](int level, int x) { return level * width + x; };
  for (long s = 0; s < states; ++s) {
    UnionFind uf((levels + 1) * width);
    int exponent = 0;
    for (int L = 0; L < levels; ++L) {
      const int p = crossings[L].position;
      const bool vertical = ((s >> L) & 1) == 0;
      for (int x = 0; x < width; ++x) {
        if (x != p && x != p + 1) uf.unite(seg(L, x), seg(L + 1, x));
      }
      if (vertical) {
        uf.unite(seg(L, p), seg(L + 1, p));
        uf.unite(seg(L, p + 1), seg(L + 1, p + 1));
      } else {
        uf.unite(seg(L, p), seg(L, p + 1));
        uf.unite(seg(L + 1, p), seg(L + 1, p + 1));
      }
      exponent += (vertical ? 1 : -1) * crossings[L].sign;
    }
    for (int x = 0; x < width; ++x) uf.unite(seg(levels, x), seg(0, x));
    const int loops = uf.sets;
    if (static_cast<int>(counts.size()) <= loops) counts.resize(loops + 1);
    auto& row = counts[loops];
    if (row.empty()) row.assign(2 * levels + 1, 0);
    ++row[exponent + levels];
  }
  LaurentPoly total;
  for (std::size_t loops = 0; loops < counts.size(); ++loops) {
    if (counts[loops].empty()) continue;
    while (dpow.size() <= loops) dpow.push_back(dpow.back() * d);
    LaurentPoly weights;
    for (int e = 0; e <= 2 * levels; ++e) {
      if (counts[loops][e] != 0) weights += LaurentPoly::monomial(counts[loops][e], e - levels);
    }
    total += weights * dpow[loops];
  }
  return total;
}

}  // namespace detail

struct OracleResult {
  LaurentPoly blackboard;  // colored bracket of the blackboard-framed closure
  LaurentPoly zero_framed;  // after removing each component's self-writhe
  int components = 0;
  std::vector<int> self_writhe;
};

/// Colored bracket of the closure of a classical braid word, every component
/// colored by f^(color). Throws BoundExceeded when a cabled diagram would
/// have more than max_crossings elementary crossings.
inline OracleResult colored_bracket(const SingularBraidWord& word, int color,
                                    int max_crossings = kDefaultMaxCrossings) {
  if (!word.is_classical()) throw Error("oracle: singular letters are not supported");
  if (color < 1) throw IndexOutOfRange("oracle: color must be positive");
  const int k = word.strands();

  // Component of each starting position, and the signed self-crossings.
  std::vector<int> at(k);  // at[x] = starting strand now at position x
  std::iota(at.begin(), at.end(), 0);
  std::vector<std::pair<int, int>> meets;  // starting strands meeting at each letter
  for (const auto& l : word.letters()) {
    meets.emplace_back(at[l.index - 1], at[l.index]);
    std::swap(at[l.index - 1], at[l.index]);
  }
  std::vector<int> comp(k, -1);
  int components = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] != -1) continue;
    // The strand starting at position p ends at position q with at[q] = p;
    // closure feeds it back into start position q.
    for (int x = s; comp[x] == -1;) {
      comp[x] = components;
      int q = 0;
      while (at[q] != x) ++q;
      x = q;
    }
    ++components;
  }
  std::vector<int> self_writhe(components, 0);
  for (std::size_t j = 0; j < meets.size(); ++j) {
    if (comp[meets[j].first] == comp[meets[j].second]) {
      self_writhe[comp[meets[j].first]] += word.letters()[j].kind == LetterKind::Positive ? 1 : -1;
    }
  }

  const std::vector<long> cheb = chebyshev(color);
  LaurentPoly total;
  std::vector<int> cables(components, 0);
  // Enumerate cable counts per component; terms with zero coefficient skipped.
  for (;;) {
    LaurentPoly coeff = 1;
    for (int c = 0; c < components; ++c) coeff *= LaurentPoly(cheb[cables[c]]);
    if (!coeff.is_zero()) {
      std::vector<int> width_at(k);
      for (int x = 0; x < k; ++x) width_at[x] = cables[comp[x]];
      const int width = std::accumulate(width_at.begin(), width_at.end(), 0);
      std::vector<detail::Crossing> crossings;
      for (const auto& l : word.letters()) {
        const int i = l.index - 1;
        const int p = width_at[i];
        const int q = width_at[i + 1];
        if (static_cast<int>(crossings.size()) + p * q > max_crossings) {
          throw BoundExceeded("oracle: cabled diagram exceeds " + std::to_string(max_crossings) +
                              " crossings");
        }
        int offset = 0;
        for (int x = 0; x < i; ++x) offset += width_at[x];
        const int sign = l.kind == LetterKind::Positive ? 1 : -1;
        // The left block of p strands moves right across q strands.
        for (int r = 0; r < p; ++r) {
          for (int j = 0; j < q; ++j) crossings.push_back({offset + p - 1 - r + j, sign});
        }
        std::swap(width_at[i], width_at[i + 1]);
      }
      total += coeff * detail::bracket(width, crossings);
    }
    int c = 0;
    while (c < components && cables[c] == color) cables[c++] = 0;
    if (c == components) break;
    ++cables[c];
  }

  OracleResult r;
  r.blackboard = total;
  r.components = components;
  r.self_writhe = self_writhe;
  LaurentPoly framing = 1;
  for (int w : self_writhe) {
    framing *= LaurentPoly::monomial(color % 2 != 0 && w % 2 != 0 ? -1 : 1, -(color * color + 2 * color) * w);
  }
  r.zero_framed = total * framing;
  return r;
}

}  // namespace skein::oracle
