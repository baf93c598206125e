#pragma once

// Local skein identities satisfied by the colored crossing and the singular
// vertex, each checked as an exact equality in a Temperley-Lieb algebra.

#include <string>
#include <vector>

#include "skein/singular.hpp"

namespace skein {

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// B_i in TL_{2c}: f^(c) (x) f^(c) around id_i (x) nested(c - i) (x) id_i.
/// B_c is the projector pair; B_0 sends every strand back.
inline TLElement turnback_element(int c, int i) {
  require_index(c, i, "turnback_element");
  const TLElement p = cable_projectors(2, c);
  Matching core = Matching::identity(2 * c);
  if (i < c) core = nested_cup_cap(c - i);
  if (0 < i && i < c) core = tensor(tensor(Matching::identity(i), core), Matching::identity(i));
  return (p * TLElement::basis(core)) * p;
}

/// The color-2 crossing as A^4 (identity smoothing) + A^-4 (turnback
/// smoothing) + (A^2 + A^-2) * vertex, each term capped by projectors.
inline TLElement color2_crossing_decomposition() {
  TLElement sum = turnback_element(2, 2).scaled(LaurentPoly::A(4));
  sum += turnback_element(2, 0).scaled(LaurentPoly::A(-4));
  sum += singular_vertex(2).scaled(LaurentPoly::A(2) + LaurentPoly::A(-2));
  return sum;
}

inline IdentityCheck check_color2_crossing() {
  return {"color-2 crossing = A^4 P + A^-4 P e P + (A^2+A^-2) V",
          cabled_crossing(2, Sign::Positive) == color2_crossing_decomposition()};
}

/// (-1)^n A^{sign * (3n^2 + 2n)}, the curl factor when a bundle of a vertex
/// is pulled through a crossing.
inline LaurentPoly vertex_twist_factor(int n, int sign) {
  return signed_monomial(n, sign * (3 * n * n + 2 * n));
}

/// Negative crossing above the vertex equals (-1)^n A^{3n^2+2n} times the
/// vertex with its side bundles crossed negatively.
inline IdentityCheck check_twist_negative(int color) {
  const int n = color / 2;
  const TLElement lhs = cabled_crossing(color, Sign::Negative) * singular_vertex(color);
  const TLElement rhs = side_crossed_vertex(color, Sign::Negative).scaled(vertex_twist_factor(n, 1));
  return {"S*V = (-1)^n A^(3n^2+2n) W-  (color " + std::to_string(color) + ")", lhs == rhs};
}

/// Vertex above a positive crossing equals (-1)^n A^{-3n^2-2n} times the
/// vertex with its side bundles crossed positively.
inline IdentityCheck check_twist_positive(int color) {
  const int n = color / 2;
  const TLElement lhs = singular_vertex(color) * cabled_crossing(color, Sign::Positive);
  const TLElement rhs = side_crossed_vertex(color, Sign::Positive).scaled(vertex_twist_factor(n, -1));
  return {"V*s = (-1)^n A^(-3n^2-2n) W+  (color " + std::to_string(color) + ")", lhs == rhs};
}

/// The vertex conjugated by a crossing pair is the vertex.
inline IdentityCheck check_vertex_conjugation(int color) {
  const TLElement lhs =
      (cabled_crossing(color, Sign::Negative) * singular_vertex(color)) * cabled_crossing(color, Sign::Positive);
  return {"S*V*s = V  (color " + std::to_string(color) + ")", lhs == singular_vertex(color)};
}

/// Projectors on the four internal bundles of the vertex change nothing.
inline IdentityCheck check_vertex_internal_projectors(int color) {
  require_cable_bound(color);
  const int n = color / 2;
  const TLElement p = cable_projectors(2, color);
  const TLElement q = cable_projectors(4, n);
  const TLElement inner = ((p * q) * TLElement::basis(vertex_core(color))) * (q * p);
  return {"vertex with internal f^(n) = vertex  (color " + std::to_string(color) + ")",
          inner == singular_vertex(color)};
}

/// Crossing expansion in the turnback basis. For the negative crossing the
/// coefficients are C_{c,i}; the positive crossing is its mirror image.
inline TLElement crossing_expansion(int c, Sign sign) {
  TLElement sum(2 * c);
  for (int i = 0; i <= c; ++i) {
    LaurentPoly coeff = coeff_C(c, i);
    if (sign == Sign::Positive) coeff = coeff.mirrored();
    sum += turnback_element(c, i).scaled(coeff);
  }
  return sum;
}

inline IdentityCheck c_expansion_check(int c, Sign sign) {
  const char* label = sign == Sign::Positive ? "positive" : "negative";
  return {std::string("C-expansion of the ") + label + " crossing (color " + std::to_string(c) + ")",
          colored_crossing(c, sign) == crossing_expansion(c, sign)};
}

/// Two stacked positive crossings: sum of D_{c,i} B_{c-i}.
inline TLElement double_crossing_expansion(int c) {
  TLElement sum(2 * c);
  for (int i = 0; i <= c; ++i) sum += turnback_element(c, c - i).scaled(coeff_D(c, i));
  return sum;
}

inline IdentityCheck d_expansion_check(int c) {
  const TLElement x = colored_crossing(c, Sign::Positive);
  return {"D-expansion of the doubled positive crossing (color " + std::to_string(c) + ")",
          x * x == double_crossing_expansion(c)};
}

/// Every identity instantiable for vertex color 2n (n given); the color-n
/// crossing expansions are included as well.
inline std::vector<IdentityCheck> check_identities(int n) {
  if (n < 1) throw IndexOutOfRange("identities: n must be positive");
  const int color = 2 * n;
  std::vector<IdentityCheck> out;
  if (n == 1) out.push_back(check_color2_crossing());
  out.push_back(check_twist_negative(color));
  out.push_back(check_twist_positive(color));
  out.push_back(check_vertex_conjugation(color));
  out.push_back(check_vertex_internal_projectors(color));
  out.push_back(c_expansion_check(n, Sign::Negative));
  out.push_back(c_expansion_check(n, Sign::Positive));
  out.push_back(d_expansion_check(n));
  return out;
}

}  // namespace skein
