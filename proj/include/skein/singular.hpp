#pragma once

// Singular braid words and their images in the colored Temperley-Lieb
// algebra: cabled crossings, the singular vertex, and the representation of
// the singular braid monoid on 2n-colored cables.
//
// Crossing convention: the letter s<i> (sigma_i) resolves as A*id + A^-1*e_i.

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/config.hpp"
#include "skein/tl_element.hpp"

namespace skein {

enum class Sign { Positive = 1, Negative = -1 };

inline Sign opposite(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

enum class LetterKind { Positive, Negative, Singular };

struct Letter {
  LetterKind kind;
  int index;  // 1-based: acts on strands index and index+1

  char symbol() const {
    switch (kind) {
      case LetterKind::Positive: return 's';
      case LetterKind::Negative: return 'S';
      case LetterKind::Singular: return 't';
    }
    return '?';
  }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in sigma_i, sigma_i^-1 and tau_i on a fixed number of strands.
class SingularBraidWord {
 public:
  SingularBraidWord() : SingularBraidWord(1) {}
  explicit SingularBraidWord(int strands, std::vector<Letter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw IndexOutOfRange("a braid word needs at least one strand");
    for (const auto& l : letters_) check(l);
  }

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  void append(Letter l) {
    check(l);
    letters_.push_back(l);
  }

  /// #positive - #negative letters; singular letters count zero.
  int writhe() const {
    int w = 0;
    for (const auto& l : letters_) {
      if (l.kind == LetterKind::Positive) ++w;
      if (l.kind == LetterKind::Negative) --w;
    }
    return w;
  }

  int singular_count() const {
    int k = 0;
    for (const auto& l : letters_) k += l.kind == LetterKind::Singular ? 1 : 0;
    return k;
  }

  bool is_classical() const { return singular_count() == 0; }

  /// Concatenation; both words must have the same strand count.
  SingularBraidWord operator*(const SingularBraidWord& o) const {
    if (o.strands_ != strands_) throw WidthMismatch(strands_, o.strands_);
    SingularBraidWord w = *this;
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    return w;
  }

  /// Text form accepted by parse_word, e.g. "strands=2 t1 s1".
  std::string to_string() const {
    std::string s = "strands=" + std::to_string(strands_);
    for (const auto& l : letters_) s += std::string(" ") + l.symbol() + std::to_string(l.index);
    return s;
  }

  /// Closure components, as strand positions grouped by the cycles of the
  /// underlying permutation. Singular letters permute like crossings.
  int component_count() const {
    std::vector<int> perm(strands_);
    for (int j = 0; j < strands_; ++j) perm[j] = j;
    for (const auto& l : letters_) std::swap(perm[l.index - 1], perm[l.index]);
    std::vector<bool> seen(strands_, false);
    int c = 0;
    for (int j = 0; j < strands_; ++j) {
      if (seen[j]) continue;
      ++c;
      for (int x = j; !seen[x]; x = perm[x]) seen[x] = true;
    }
    return c;
  }

  friend bool operator==(const SingularBraidWord&, const SingularBraidWord&) = default;

 private:
  void check(const Letter& l) const {
    if (l.index < 1 || l.index > strands_ - 1) {
      throw IndexOutOfRange(std::string("letter ") + l.symbol() + std::to_string(l.index) +
                            " out of range for " + std::to_string(strands_) + " strands");
    }
  }

  int strands_;
  std::vector<Letter> letters_;
};

/// Grammar: "strands=<k>" followed by whitespace-separated tokens s<i>
/// (sigma_i), S<i> (sigma_i^-1) and t<i> (tau_i).
inline SingularBraidWord parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_token = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::pair{start, text.substr(start, pos - start)};
  };
  auto parse_positive = [](std::string_view digits, std::size_t at) {
    if (digits.empty() || digits.size() > 6) throw ParseError("expected a positive integer", at);
    int v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("expected a positive integer", at);
      }
      v = v * 10 + (ch - '0');
    }
    if (v < 1) throw ParseError("expected a positive integer", at);
    return v;
  };

  skip_space();
  if (pos >= text.size()) throw ParseError("missing header strands=<k>", pos);
  auto [hstart, header] = read_token();
  constexpr std::string_view kHeader = "strands=";
  if (header.substr(0, kHeader.size()) != kHeader) {
    throw ParseError("expected header strands=<k>", hstart);
  }
  const int strands = parse_positive(header.substr(kHeader.size()), hstart + kHeader.size());
  SingularBraidWord word(strands);
  for (;;) {
    skip_space();
    if (pos >= text.size()) break;
    auto [start, token] = read_token();
    LetterKind kind;
    switch (token[0]) {
      case 's': kind = LetterKind::Positive; break;
      case 'S': kind = LetterKind::Negative; break;
      case 't': kind = LetterKind::Singular; break;
      default: throw ParseError("unknown letter '" + std::string(token) + "'", start);
    }
    const int index = parse_positive(token.substr(1), start + 1);
    if (index > strands - 1) {
      throw IndexOutOfRange("token '" + std::string(token) + "' at byte " + std::to_string(start) +
                            " is out of range for " + std::to_string(strands) + " strands");
    }
    word.append({kind, index});
  }
  return word;
}

// ---------------------------------------------------------------------------
// Generator elements

inline void require_color(int color) {
  if (color < 2 || color % 2 != 0) {
    throw IndexOutOfRange("cable color must be even and at least 2 (got " + std::to_string(color) +
                          ")");
  }
}

inline void require_cable_bound(int color) {
  require_color(color);
  if (color > limits().max_cable_color) {
    throw BoundExceeded("cable color " + std::to_string(color) + " exceeds bound " +
                        std::to_string(limits().max_cable_color));
  }
}

/// Width-2 crossing: A*id + A^-1*e_1 (positive) or A^-1*id + A*e_1 (negative).
inline TLElement elementary_crossing(Sign sign) {
  const int s = sign == Sign::Positive ? 1 : -1;
  TLElement x = TLElement::basis(Matching::identity(2), LaurentPoly::A(s));
  x.add_term(Matching::cup_cap(2, 1), LaurentPoly::A(-s));
  return x;
}

/// The crossing of strands position-1 and position (1-based) inside TL_width.
inline TLElement elementary_crossing(int width, int position, Sign sign) {
  if (position < 1 || position > width - 1) {
    throw IndexOutOfRange("crossing position " + std::to_string(position) + " not in [1, " +
                          std::to_string(width - 1) + "]");
  }
  return embed(elementary_crossing(sign), width, position - 1);
}

/// x * (crossing between strands position-1 and position of TL_total), 1-based.
inline TLElement times_crossing(const TLElement& x, int position, Sign sign) {
  return x * embed(elementary_crossing(sign), x.width(), position - 1);
}

/// Right-multiplies x by the cable crossing in which the block of `left`
/// strands starting at 0-based `offset` moves right across the next `right`
/// strands. Sign::Positive uses sigma letters throughout.
inline TLElement times_cable_crossing(TLElement x, int offset, int left, int right, Sign sign) {
  for (int r = 0; r < left; ++r) {
    const int start = offset + left - 1 - r;  // strand that travels, 0-based
    for (int k = 0; k < right; ++k) x = times_crossing(x, start + k + 1, sign);
  }
  return x;
}

/// f^(color) on each of `cables` adjacent cables.
inline TLElement cable_projectors(int cables, int color) {
  TLElement p = jones_wenzl(color);
  for (int c = 1; c < cables; ++c) p = tensor(p, jones_wenzl(color));
  return p;
}

/// Nested cup-cap on 2h strands: bottom h-1-j paired with bottom h+j, top likewise.
inline Matching nested_cup_cap(int h) {
  std::vector<int> pair(4 * static_cast<std::size_t>(h));
  const int m = 2 * h;
  for (int j = 0; j < h; ++j) {
    pair[h - 1 - j] = h + j;
    pair[h + j] = h - 1 - j;
    pair[m + h - 1 - j] = m + h + j;
    pair[m + h + j] = m + h - 1 - j;
  }
  return Matching::from_pairing(pair);
}

/// Undecorated vertex diagram on two 2n-cables: each leg sends n strands
/// vertically and n strands into a cup (top) or cap (bottom) joining the legs.
inline Matching vertex_core(int color) {
  require_color(color);
  const int n = color / 2;
  return tensor(tensor(Matching::identity(n), nested_cup_cap(n)), Matching::identity(n));
}

namespace detail {

struct GeneratorCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<const TLElement>> table;  // (key kind, color)
};

inline GeneratorCache& generator_cache() {
  static GeneratorCache cache;
  return cache;
}

template <class Build>
const TLElement& cached_generator(int kind, int color, Build build) {
  auto& cache = generator_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find({kind, color});
    if (it != cache.table.end()) return *it->second;
  }
  TLElement value = build();
  std::lock_guard lock(cache.mutex);
  auto [it, fresh] =
      cache.table.try_emplace({kind, color}, std::make_unique<const TLElement>(std::move(value)));
  return *it->second;
}

}  // namespace detail

/// Crossing of two c-colored cables in TL_{2c}, any c >= 1: the (c x c) grid
/// of elementary crossings of one sign, capped by f^(c) (x) f^(c) on both sides.
inline TLElement colored_crossing(int c, Sign sign) {
  if (c < 1) throw IndexOutOfRange("colored_crossing: color must be positive");
  const TLElement p = cable_projectors(2, c);
  return times_cable_crossing(p, 0, c, c, sign) * p;
}

/// The 2n-colored crossing in TL_{4n}, memoized.
inline const TLElement& cabled_crossing(int color, Sign sign) {
  require_cable_bound(color);
  const int kind = sign == Sign::Positive ? 0 : 1;
  return detail::cached_generator(kind, color, [&] { return colored_crossing(color, sign); });
}

/// The singular vertex in TL_{4n}: vertex_core with f^(2n) on all four legs.
inline const TLElement& singular_vertex(int color) {
  require_cable_bound(color);
  return detail::cached_generator(2, color, [&] {
    const TLElement p = cable_projectors(2, color);
    return (p * TLElement::basis(vertex_core(color))) * p;
  });
}

inline const TLElement& generator_image(LetterKind kind, int color) {
  switch (kind) {
    case LetterKind::Positive: return cabled_crossing(color, Sign::Positive);
    case LetterKind::Negative: return cabled_crossing(color, Sign::Negative);
    case LetterKind::Singular: return singular_vertex(color);
  }
  throw Error("unknown letter kind");
}

/// The vertex with its two side bundles crossed (sign = crossing of the
/// bundle leaving the top-left leg as it travels to the bottom-right leg).
/// The inner cup/cap strands pass beneath both side bundles.
inline TLElement side_crossed_vertex(int color, Sign sign) {
  require_cable_bound(color);
  const int n = color / 2;
  const TLElement p = cable_projectors(2, color);
  TLElement x = p * TLElement::basis(vertex_core(color));
  // Blocks (left side n | inner 2n | right side n) -> (right | inner | left).
  x = times_cable_crossing(std::move(x), n, 2 * n, n, Sign::Negative);
  x = times_cable_crossing(std::move(x), 0, n, n, sign);
  x = times_cable_crossing(std::move(x), n, n, 2 * n, Sign::Positive);
  return x * p;
}

// ---------------------------------------------------------------------------
// Representation of the singular braid monoid

inline void require_total_width(int color, int strands) {
  require_color(color);
  if (color * strands > limits().max_total_width) {
    throw BoundExceeded("total width " + std::to_string(color * strands) + " exceeds bound " +
                        std::to_string(limits().max_total_width));
  }
}

/// x * (image of one letter), for x that already carries f^(color) on every
/// cable at its bottom. Projectors slide through cabled crossings, so a
/// crossing letter only needs its raw grid; a vertex needs its core followed
/// by the two leg projectors.
inline TLElement apply_letter(TLElement x, const Letter& letter, int color) {
  const int offset = (letter.index - 1) * color;
  switch (letter.kind) {
    case LetterKind::Positive:
    case LetterKind::Negative: {
      require_cable_bound(color);
      const Sign s = letter.kind == LetterKind::Positive ? Sign::Positive : Sign::Negative;
      return times_cable_crossing(std::move(x), offset, color, color, s);
    }
    case LetterKind::Singular: {
      require_cable_bound(color);
      x = x * embed(TLElement::basis(vertex_core(color)), x.width(), offset);
      x = x * embed(jones_wenzl(color), x.width(), offset);
      return x * embed(jones_wenzl(color), x.width(), offset + color);
    }
  }
  throw Error("unknown letter kind");
}

/// The image of a word in TL_{color * strands}: f^(color) on every cable,
/// followed by the generator image of each letter in reading order (first
/// letter on top).
inline TLElement rho_hat(const SingularBraidWord& word, int color) {
  require_total_width(color, word.strands());
  TLElement x = cable_projectors(word.strands(), color);
  for (const auto& letter : word.letters()) x = apply_letter(std::move(x), letter, color);
  return x;
}

/// Reference evaluation: the literal product of embedded cached generator
/// images. Slower than rho_hat; used to cross-check it.
inline TLElement rho_hat_by_generators(const SingularBraidWord& word, int color) {
  require_total_width(color, word.strands());
  const int total = color * word.strands();
  TLElement x = cable_projectors(word.strands(), color);
  for (const auto& letter : word.letters()) {
    x = x * embed(generator_image(letter.kind, color), total, (letter.index - 1) * color);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Relation checker

struct RelationCheck {
  std::string label;
  SingularBraidWord lhs;
  SingularBraidWord rhs;
  bool passed = false;
};

struct RelationReport {
  int strands = 0;
  int color = 0;
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Every relation of the singular braid monoid instantiable on k strands,
/// each checked as an equality of rho_hat images.
inline RelationReport check_relations(int strands, int color) {
  require_total_width(color, strands);
  RelationReport report{strands, color, {}};
  auto word = [&](std::initializer_list<Letter> ls) { return SingularBraidWord(strands, ls); };
  auto s = [](int i) { return Letter{LetterKind::Positive, i}; };
  auto S = [](int i) { return Letter{LetterKind::Negative, i}; };
  auto t = [](int i) { return Letter{LetterKind::Singular, i}; };
  auto add = [&](std::string label, SingularBraidWord lhs, SingularBraidWord rhs) {
    report.checks.push_back({std::move(label), std::move(lhs), std::move(rhs), false});
  };
  const int g = strands - 1;  // generator count
  for (int i = 1; i <= g; ++i) {
    add("1: s" + std::to_string(i) + " S" + std::to_string(i) + " = e", word({s(i), S(i)}), word({}));
    add("1: S" + std::to_string(i) + " s" + std::to_string(i) + " = e", word({S(i), s(i)}), word({}));
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      if (std::abs(i - j) <= 1) continue;
      const std::string si = std::to_string(i);
      const std::string sj = std::to_string(j);
      if (i < j) add("2a: s" + si + " s" + sj + " = s" + sj + " s" + si, word({s(i), s(j)}), word({s(j), s(i)}));
      add("2b: s" + si + " t" + sj + " = t" + sj + " s" + si, word({s(i), t(j)}), word({t(j), s(i)}));
      if (i < j) add("2c: t" + si + " t" + sj + " = t" + sj + " t" + si, word({t(i), t(j)}), word({t(j), t(i)}));
    }
  }
  for (int i = 1; i <= g; ++i) {
    const std::string si = std::to_string(i);
    add("3: t" + si + " s" + si + " = s" + si + " t" + si, word({t(i), s(i)}), word({s(i), t(i)}));
  }
  for (int i = 1; i + 1 <= g; ++i) {
    const std::string a = std::to_string(i);
    const std::string b = std::to_string(i + 1);
    add("4a: s" + a + " s" + b + " s" + a + " = s" + b + " s" + a + " s" + b,
        word({s(i), s(i + 1), s(i)}), word({s(i + 1), s(i), s(i + 1)}));
    add("4b: t" + a + " s" + b + " s" + a + " = s" + b + " s" + a + " t" + b,
        word({t(i), s(i + 1), s(i)}), word({s(i + 1), s(i), t(i + 1)}));
    add("4c: t" + b + " s" + a + " s" + b + " = s" + a + " s" + b + " t" + a,
        word({t(i + 1), s(i), s(i + 1)}), word({s(i), s(i + 1), t(i)}));
  }
  for (auto& c : report.checks) c.passed = rho_hat(c.lhs, color) == rho_hat(c.rhs, color);
  return report;
}

}  // namespace skein
