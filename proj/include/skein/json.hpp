#pragma once

// JSON wire forms.
//
//   LaurentPoly        [[exponent, "coefficient"], ...]   ascending exponents
//   RationalFn         {"num": LaurentPoly, "den": LaurentPoly}
//   Matching           pairing array [p_0, ..., p_{2m-1}]
//   TLElement          {"width": m, "terms": [[pairing, RationalFn], ...]}   sorted by pairing
//   SingularBraidWord  {"strands": k, "letters": [["s"|"S"|"t", i], ...]}
//
// Coefficients are decimal strings so that big integers survive any reader.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skein/identities.hpp"
#include "skein/invariant.hpp"
#include "skein/oracle.hpp"
#include "skein/singular.hpp"

namespace skein {

using json = nlohmann::json;

inline void to_json(json& j, const LaurentPoly& p) {
  j = json::array();
  p.for_each_term([&](int e, const Integer& c) { j.push_back(json::array({e, c.get_str()})); });
}

inline void from_json(const json& j, LaurentPoly& p) {
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& t : j) {
    terms.emplace_back(t.at(0).get<int>(), Integer(t.at(1).get<std::string>()));
  }
  p = LaurentPoly::from_terms(terms);
}

inline void to_json(json& j, const RationalFn& r) { j = json{{"num", r.num()}, {"den", r.den()}}; }

inline void from_json(const json& j, RationalFn& r) {
  r = RationalFn(j.at("num").get<LaurentPoly>(), j.at("den").get<LaurentPoly>());
}

inline void to_json(json& j, const Matching& m) { j = m.pairing_array(); }

inline void from_json(const json& j, Matching& m) {
  const auto pairing = j.get<std::vector<int>>();
  m = Matching::from_pairing(pairing);
}

inline void to_json(json& j, const TLElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) terms.push_back(json::array({m, c}));
  j = json{{"width", x.width()}, {"terms", terms}};
}

inline void from_json(const json& j, TLElement& x) {
  x = TLElement(j.at("width").get<int>());
  for (const auto& t : j.at("terms")) x.add_term(t.at(0).get<Matching>(), t.at(1).get<RationalFn>());
}

inline void to_json(json& j, const SingularBraidWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters()) letters.push_back(json::array({std::string(1, l.symbol()), l.index}));
  j = json{{"strands", w.strands()}, {"letters", letters}};
}

inline void from_json(const json& j, SingularBraidWord& w) {
  SingularBraidWord out(j.at("strands").get<int>());
  for (const auto& l : j.at("letters")) {
    const auto sym = l.at(0).get<std::string>();
    LetterKind kind;
    if (sym == "s") {
      kind = LetterKind::Positive;
    } else if (sym == "S") {
      kind = LetterKind::Negative;
    } else if (sym == "t") {
      kind = LetterKind::Singular;
    } else {
      throw ParseError("unknown letter '" + sym + "'", 0);
    }
    out.append({kind, l.at(1).get<int>()});
  }
  w = std::move(out);
}

inline void to_json(json& j, const InvariantResult& r) {
  j = json{{"value", r.value},
           {"color", r.color},
           {"strands", r.strands},
           {"writhe", r.writhe},
           {"singular_count", r.singular_count},
           {"framing", to_string(r.framing)},
           {"framing_caveat", r.framing_caveat}};
}

inline void from_json(const json& j, InvariantResult& r) {
  r.value = j.at("value").get<RationalFn>();
  r.color = j.at("color").get<int>();
  r.strands = j.at("strands").get<int>();
  r.writhe = j.at("writhe").get<int>();
  r.singular_count = j.at("singular_count").get<int>();
  r.framing = j.at("framing").get<std::string>() == "zero" ? Framing::Zero : Framing::Blackboard;
  r.framing_caveat = j.at("framing_caveat").get<bool>();
}

inline void to_json(json& j, const IntegralityReport& r) {
  j = json{{"singular_count", r.singular_count},
           {"color", r.color},
           {"raw", r.raw},
           {"scaled", r.scaled},
           {"integral", r.integral},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

inline void from_json(const json& j, IntegralityReport& r) {
  r.singular_count = j.at("singular_count").get<int>();
  r.color = j.at("color").get<int>();
  r.raw = j.at("raw").get<RationalFn>();
  r.scaled = j.at("scaled").get<RationalFn>();
  r.integral = j.at("integral").get<bool>();
  if (j.at("witness").is_null()) {
    r.witness.reset();
  } else {
    r.witness = j.at("witness").get<LaurentPoly>();
  }
}

inline void to_json(json& j, const RelationCheck& c) {
  j = json{{"relation", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}};
}

inline void to_json(json& j, const RelationReport& r) {
  j = json{{"strands", r.strands}, {"color", r.color}, {"all_passed", r.all_passed()}, {"checks", r.checks}};
}

inline void to_json(json& j, const IdentityCheck& c) { j = json{{"identity", c.name}, {"holds", c.holds}}; }

inline void to_json(json& j, const ConjectureEvidence& e) {
  j = json{{"conjecture", e.conjecture}, {"instance", e.instance}, {"outcome", e.outcome}, {"value", e.value}};
}

inline void to_json(json& j, const ConnectedSumReport& r) {
  j = json{{"sum_word", r.sum_word}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

namespace oracle {

inline void to_json(json& j, const OracleResult& r) {
  j = json{{"blackboard", r.blackboard},
           {"zero_framed", r.zero_framed},
           {"components", r.components},
           {"self_writhe", r.self_writhe}};
}

}  // namespace oracle

}  // namespace skein
