#pragma once

// Crossingless matchings: the diagram basis of the Temperley-Lieb algebra.
//
// Boundary convention: a width-m matching has 2m points. Points 0..m-1 are on
// the bottom edge and m..2m-1 on the top edge, both read left to right.
// compose(a, b) stacks a above b.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

/// Default upper width for enumerate_basis.
inline constexpr int kDefaultBasisBound = 8;

class Matching {
 public:
  Matching() = default;

  static Matching identity(int m) {
    require_positive(m);
    Matching x(m);
    for (int j = 0; j < m; ++j) x.link(j, m + j);
    return x;
  }

  /// The generator e_i (1 <= i <= m-1): bottom i-1, i capped, top copies cupped.
  static Matching cup_cap(int m, int i) {
    require_positive(m);
    if (i < 1 || i > m - 1) {
      throw IndexOutOfRange("cup_cap: index " + std::to_string(i) + " not in [1, " +
                            std::to_string(m - 1) + "]");
    }
    Matching x = identity(m);
    x.link(i - 1, i);
    x.link(m + i - 1, m + i);
    return x;
  }

  /// Validating constructor from a pairing array of length 2m.
  static Matching from_pairing(std::span<const int> pairing) {
    const auto n = static_cast<int>(pairing.size());
    if (n == 0 || n % 2 != 0) throw InvalidMatching("pairing array must have positive even length");
    if (n > 2 * 127) throw BoundExceeded("matching width too large");
    Matching x(n / 2);
    for (int p = 0; p < n; ++p) {
      const int q = pairing[p];
      if (q < 0 || q >= n || q == p || pairing[q] != p) {
        throw InvalidMatching("pairing is not a fixed-point-free involution at point " +
                              std::to_string(p));
      }
      x.pair_[p] = static_cast<std::uint8_t>(q);
    }
    if (!x.is_planar()) throw InvalidMatching("pairing has crossing chords");
    return x;
  }

  int width() const noexcept { return static_cast<int>(pair_.size() / 2); }
  int partner(int p) const { return pair_[p]; }
  std::span<const std::uint8_t> pairing() const noexcept { return pair_; }

  std::vector<int> pairing_array() const { return {pair_.begin(), pair_.end()}; }

  /// Number of strands joining the bottom edge to the top edge.
  int through_strands() const {
    int t = 0;
    for (int j = 0; j < width(); ++j) t += pair_[j] >= width() ? 1 : 0;
    return t;
  }

  /// Non-crossing test in the circular order bottom left-to-right, then top
  /// right-to-left.
  bool is_planar() const {
    const int m = width();
    auto circ = [m](int p) { return p < m ? p : 3 * m - 1 - p; };
    std::vector<int> at(2 * m);
    for (int p = 0; p < 2 * m; ++p) at[circ(p)] = p;
    std::vector<int> stack;
    for (int c = 0; c < 2 * m; ++c) {
      const int p = at[c];
      const int other = circ(pair_[p]);
      if (other > c) {
        stack.push_back(c);
      } else {
        if (stack.empty() || stack.back() != other) return false;
        stack.pop_back();
      }
    }
    return stack.empty();
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < pair_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(pair_[k]);
    }
    return s + "]";
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  explicit Matching(int m) : pair_(2 * static_cast<std::size_t>(m), 0) {}

  static void require_positive(int m) {
    if (m < 1) throw IndexOutOfRange("matching width must be positive");
    if (m > 127) throw BoundExceeded("matching width too large");
  }

  void link(int p, int q) {
    pair_[p] = static_cast<std::uint8_t>(q);
    pair_[q] = static_cast<std::uint8_t>(p);
  }

  friend struct MatchingBuilder;

  std::vector<std::uint8_t> pair_;
};

/// Raw construction for trusted internal code paths (no validation in release).
struct MatchingBuilder {
  static Matching make(std::vector<std::uint8_t> pairing) {
    Matching x;
    x.pair_ = std::move(pairing);
#ifndef NDEBUG
    if (!x.is_planar()) throw InvalidMatching("internal construction produced a crossing");
#endif
    return x;
  }
};

struct Composition {
  Matching matching;
  int loops = 0;
};

/// Stack `above` on top of `below` and follow strands. Returns the resulting
/// matching and the number of closed loops formed in the middle.
inline Composition compose(const Matching& above, const Matching& below) {
  const int m = above.width();
  if (below.width() != m) throw WidthMismatch(m, below.width());
  const auto a = above.pairing();
  const auto b = below.pairing();
  std::vector<std::uint8_t> res(2 * static_cast<std::size_t>(m), 0xFF);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);  // middle points

  // Enter `above` at point x; middle point j is above's bottom j and below's top m+j.
  auto from_above = [&](int x) {
    for (;;) {
      const int y = a[x];
      if (y >= m) return y;
      seen[y] = true;
      const int z = b[m + y];
      if (z < m) return z;
      seen[z - m] = true;
      x = z - m;
    }
  };
  auto from_below = [&](int x) {
    for (;;) {
      const int y = b[x];
      if (y < m) return y;
      seen[y - m] = true;
      const int z = a[y - m];
      if (z >= m) return z;
      seen[z] = true;
      x = m + z;
    }
  };
  for (int t = m; t < 2 * m; ++t) {
    if (res[t] != 0xFF) continue;
    const int e = from_above(t);
    res[t] = static_cast<std::uint8_t>(e);
    res[e] = static_cast<std::uint8_t>(t);
  }
  for (int s = 0; s < m; ++s) {
    if (res[s] != 0xFF) continue;
    const int e = from_below(s);
    res[s] = static_cast<std::uint8_t>(e);
    res[e] = static_cast<std::uint8_t>(s);
  }
  int loops = 0;
  for (int j = 0; j < m; ++j) {
    if (seen[j]) continue;
    ++loops;
    int x = j;
    do {
      seen[x] = true;
      const int y = b[m + x] - m;  // below's top-to-top arc
      seen[y] = true;
      x = a[y];  // above's bottom-to-bottom arc
    } while (x != j);
  }
  return {MatchingBuilder::make(std::move(res)), loops};
}

/// Side-by-side juxtaposition; a on the left.
inline Matching tensor(const Matching& a, const Matching& b) {
  const int ma = a.width();
  const int mb = b.width();
  const int m = ma + mb;
  auto map_a = [&](int p) { return p < ma ? p : p - ma + m; };
  auto map_b = [&](int p) { return p < mb ? p + ma : p - mb + m + ma; };
  std::vector<std::uint8_t> res(2 * static_cast<std::size_t>(m));
  for (int p = 0; p < 2 * ma; ++p) res[map_a(p)] = static_cast<std::uint8_t>(map_a(a.partner(p)));
  for (int p = 0; p < 2 * mb; ++p) res[map_b(p)] = static_cast<std::uint8_t>(map_b(b.partner(p)));
  return MatchingBuilder::make(std::move(res));
}

/// Loops after joining top point m+j to bottom point j around the side.
inline int trace_close(const Matching& a) {
  const int m = a.width();
  std::vector<bool> seen(2 * static_cast<std::size_t>(m), false);
  int loops = 0;
  for (int s = 0; s < 2 * m; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = s;
    while (!seen[x]) {
      seen[x] = true;
      const int y = a.partner(x);
      seen[y] = true;
      x = y >= m ? y - m : y + m;
    }
  }
  return loops;
}

/// All Catalan(m) matchings of width m, sorted by pairing array.
inline std::vector<Matching> enumerate_basis(int m, int bound = kDefaultBasisBound) {
  if (m < 1) throw IndexOutOfRange("enumerate_basis: width must be positive");
  if (m > bound) {
    throw BoundExceeded("enumerate_basis: width " + std::to_string(m) + " exceeds bound " +
                        std::to_string(bound));
  }
  const int n = 2 * m;
  auto point = [m](int c) { return c < m ? c : 3 * m - 1 - c; };  // circular -> point
  std::vector<int> chord(n, -1);
  std::vector<Matching> out;
  // Non-crossing perfect matchings of the circle: pair the first free
  // position with one at odd distance, recurse on both sides.
  std::function<void(int)> fill = [&](int c) {
    while (c < n && chord[c] != -1) ++c;
    if (c == n) {
      std::vector<std::uint8_t> pair(n);
      for (int k = 0; k < n; ++k) pair[point(k)] = static_cast<std::uint8_t>(point(chord[k]));
      out.push_back(MatchingBuilder::make(std::move(pair)));
      return;
    }
    for (int e = c + 1; e < n && chord[e] == -1; e += 2) {
      bool ok = true;
      for (int k = c + 1; k < e; ++k) ok = ok && chord[k] == -1;
      if (!ok) break;
      chord[c] = e;
      chord[e] = c;
      fill(c + 1);
      chord[c] = chord[e] = -1;
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skein
