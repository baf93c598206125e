#pragma once

// The invariant of closed singular braids colored by 2n, framing
// normalization, closed-form example values, connected sums and the
// integrality checks.

#include <optional>
#include <string>
#include <vector>

#include "skein/identities.hpp"
#include "skein/singular.hpp"

namespace skein {

enum class Framing { Blackboard, Zero };

inline const char* to_string(Framing f) { return f == Framing::Blackboard ? "blackboard" : "zero"; }

struct InvariantResult {
  RationalFn value;
  int color = 2;
  int strands = 1;
  int writhe = 0;
  int singular_count = 0;
  Framing framing = Framing::Blackboard;
  /// Set when a framing correction was applied to a word with vertices, where
  /// it has no standard meaning.
  bool framing_caveat = false;

  friend bool operator==(const InvariantResult&, const InvariantResult&) = default;
};

/// Trace closure of rho_hat: the blackboard-framed value of the closed word.
inline InvariantResult evaluate(const SingularBraidWord& word, int color) {
  InvariantResult r;
  r.value = trace(rho_hat(word, color));
  r.color = color;
  r.strands = word.strands();
  r.writhe = word.writhe();
  r.singular_count = word.singular_count();
  return r;
}

/// Kink factor of a positive curl on a strand colored c: (-1)^c A^{c^2 + 2c}.
inline LaurentPoly curl_factor(int c) { return signed_monomial(c, c * c + 2 * c); }

/// Removes the blackboard framing: multiplies by A^{-(c^2+2c) w} for color c
/// (c even) and writhe w. Already zero-framed results are returned unchanged.
inline InvariantResult framing_correct(InvariantResult r) {
  if (r.framing == Framing::Zero) return r;
  const int c = r.color;
  r.value = r.value * RationalFn(signed_monomial(c * r.writhe, -(c * c + 2 * c) * r.writhe));
  r.framing = Framing::Zero;
  r.framing_caveat = r.singular_count > 0;
  return r;
}

inline InvariantResult evaluate(const SingularBraidWord& word, int color, Framing framing) {
  InvariantResult r = evaluate(word, color);
  return framing == Framing::Zero ? framing_correct(std::move(r)) : r;
}

inline void require_half_color(int n) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
}

/// Vertex closed against one positive crossing, as the displayed sum
///   (-1)^n A^{-3n^2-2n} sum_i C_{n,i} Delta_{2n}^2 / Delta_{2n-i}.
inline RationalFn closed_form_example1(int n) {
  require_half_color(n);
  const LaurentPoly d2n = delta(2 * n);
  RationalFn sum;
  for (int i = 0; i <= n; ++i) sum += RationalFn(coeff_C(n, i) * d2n * d2n, delta(2 * n - i));
  return RationalFn(signed_monomial(n, -3 * n * n - 2 * n)) * sum;
}

/// Same prefactor with Delta_{n+i} in place of Delta_{2n-i}; this is the
/// value the trace closure of "t1 s1" actually produces.
inline RationalFn closed_form_example1_reindexed(int n) {
  require_half_color(n);
  const LaurentPoly d2n = delta(2 * n);
  RationalFn sum;
  for (int i = 0; i <= n; ++i) sum += RationalFn(coeff_C(n, i) * d2n * d2n, delta(n + i));
  return RationalFn(signed_monomial(n, -3 * n * n - 2 * n)) * sum;
}

/// Vertex closed against two positive crossings:
///   A^{-6n^2-4n} sum_i D_{n,i} Delta_{2n}^2 / Delta_{n+i}.
inline RationalFn closed_form_example2(int n) {
  require_half_color(n);
  const LaurentPoly d2n = delta(2 * n);
  RationalFn sum;
  for (int i = 0; i <= n; ++i) sum += RationalFn(coeff_D(n, i) * d2n * d2n, delta(n + i));
  return RationalFn(LaurentPoly::A(-6 * n * n - 4 * n)) * sum;
}

// ---------------------------------------------------------------------------
// Connected sum

/// Braid connected sum: K on strands 1..k1, then K' shifted onto strands
/// k1..k1+k2-1, sharing strand k1. For knot words the closure is K # K'.
inline SingularBraidWord connected_sum(const SingularBraidWord& k, const SingularBraidWord& kp) {
  const int shift = k.strands() - 1;
  SingularBraidWord out(k.strands() + kp.strands() - 1, k.letters());
  for (auto l : kp.letters()) {
    l.index += shift;
    out.append(l);
  }
  return out;
}

struct ConnectedSumReport {
  SingularBraidWord sum_word{1};
  RationalFn lhs;  // Delta_{2n} * [K # K']
  RationalFn rhs;  // [K] * [K']
  bool holds = false;
};

inline ConnectedSumReport connected_sum_check(const SingularBraidWord& k, const SingularBraidWord& kp, int color) {
  if (k.component_count() != 1 || kp.component_count() != 1) {
    throw Error("connected_sum_check: both words must close to knots");
  }
  ConnectedSumReport r;
  r.sum_word = connected_sum(k, kp);
  r.lhs = RationalFn(delta(color)) * evaluate(r.sum_word, color).value;
  r.rhs = evaluate(k, color).value * evaluate(kp, color).value;
  r.holds = r.lhs == r.rhs;
  return r;
}

// ---------------------------------------------------------------------------
// Integrality

struct IntegralityReport {
  int singular_count = 0;
  int color = 2;
  RationalFn raw;
  RationalFn scaled;  // coeff_C(color, n)^k * raw
  bool integral = false;
  std::optional<LaurentPoly> witness;
};

inline IntegralityReport integrality_check(const SingularBraidWord& word, int color) {
  require_color(color);
  IntegralityReport r;
  r.singular_count = word.singular_count();
  r.color = color;
  r.raw = evaluate(word, color).value;
  r.scaled = RationalFn(coeff_C(color, color / 2).pow(r.singular_count)) * r.raw;
  if (auto t = as_laurent(r.scaled)) {
    r.integral = true;
    r.witness = *t.value;
  }
  return r;
}

/// An observation about a conjectured statement: what was tested and what
/// came out. Never an assertion.
struct ConjectureEvidence {
  std::string conjecture;
  std::string instance;
  bool outcome = false;
  std::string value;
};

inline ConjectureEvidence integrality_evidence(const SingularBraidWord& word, int color) {
  const IntegralityReport r = integrality_check(word, color);
  return {"C_{2n,n}^k [L]_{2n} is a Laurent polynomial",
          word.to_string() + " color " + std::to_string(color), r.integral, r.scaled.to_string()};
}

/// Closed value of the word with its first classical letter replaced by the
/// turnback element B_i on c-colored cables, for i = 0..c; the letter's
/// expansion coefficient is returned alongside each value.
struct ExpansionSummand {
  int i = 0;
  LaurentPoly coefficient;
  RationalFn skein_value;
  RationalFn product;
};

inline std::vector<ExpansionSummand> crossing_expansion_summands(const SingularBraidWord& word, int c) {
  require_total_width(c, word.strands());
  std::size_t at = word.letters().size();
  for (std::size_t j = 0; j < word.letters().size(); ++j) {
    if (word.letters()[j].kind != LetterKind::Singular) {
      at = j;
      break;
    }
  }
  if (at == word.letters().size()) throw Error("crossing_expansion_summands: word has no crossing");
  const Letter pivot = word.letters()[at];
  const int total = c * word.strands();
  std::vector<ExpansionSummand> out;
  for (int i = 0; i <= c; ++i) {
    TLElement x = cable_projectors(word.strands(), c);
    for (std::size_t j = 0; j < word.letters().size(); ++j) {
      const Letter& l = word.letters()[j];
      if (j == at) {
        x = x * embed(turnback_element(c, i), total, (l.index - 1) * c);
      } else if (l.kind == LetterKind::Singular) {
        x = apply_letter(std::move(x), l, c);
      } else {
        x = times_cable_crossing(std::move(x), (l.index - 1) * c, c, c,
                                 l.kind == LetterKind::Positive ? Sign::Positive : Sign::Negative);
      }
    }
    ExpansionSummand s;
    s.i = i;
    s.coefficient = coeff_C(c, i);
    if (pivot.kind == LetterKind::Positive) s.coefficient = s.coefficient.mirrored();
    s.skein_value = trace(x);
    s.product = RationalFn(s.coefficient) * s.skein_value;
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<ConjectureEvidence> summand_integrality_evidence(const SingularBraidWord& word, int c) {
  std::vector<ConjectureEvidence> out;
  for (const auto& s : crossing_expansion_summands(word, c)) {
    out.push_back({"C_{n,i} S_{n,i} is a Laurent polynomial",
                   word.to_string() + " color " + std::to_string(c) + " i=" + std::to_string(s.i),
                   static_cast<bool>(as_laurent(s.product)), s.product.to_string()});
  }
  return out;
}

}  // namespace skein
