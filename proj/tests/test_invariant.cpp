#include <gtest/gtest.h>

#include "skein/identities.hpp"
#include "skein/invariant.hpp"
#include "skein/oracle.hpp"

using namespace skein;

namespace {

LaurentPoly Ap(int e) { return LaurentPoly::A(e); }
RationalFn value(const char* text, int color) { return evaluate(parse_word(text), color).value; }

TEST(Evaluate, Unknot) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(value("strands=1", 2 * n), RationalFn(delta(2 * n))) << n;
  EXPECT_EQ(value("strands=1", 2), RationalFn(Ap(4) + 1 + Ap(-4)));
  const auto r = evaluate(parse_word("strands=3 s1 S2 s1"), 2);
  EXPECT_EQ(r.strands, 3);
  EXPECT_EQ(r.writhe, 1);
  EXPECT_EQ(r.framing, Framing::Blackboard);
}

TEST(Evaluate, UnlinkMultiplies) {
  EXPECT_EQ(value("strands=2", 2), RationalFn(delta(2) * delta(2)));
  EXPECT_EQ(value("strands=3", 2), RationalFn(delta(2) * delta(2) * delta(2)));
}

TEST(Evaluate, KinkFactor) {
  for (int c : {2, 4}) {
    EXPECT_EQ(value("strands=2 s1", c), RationalFn(curl_factor(c) * delta(c))) << c;
    EXPECT_EQ(value("strands=2 S1", c), RationalFn(delta(c), curl_factor(c))) << c;
  }
  EXPECT_EQ(curl_factor(2), Ap(8));
}

TEST(Framing, Correction) {
  InvariantResult r = evaluate(parse_word("strands=2 s1"), 2);
  const InvariantResult z = framing_correct(r);
  EXPECT_EQ(z.framing, Framing::Zero);
  EXPECT_EQ(z.value, r.value * RationalFn(Ap(-8)));
  EXPECT_FALSE(z.framing_caveat);
  EXPECT_EQ(framing_correct(z), z);
  const InvariantResult flat = evaluate(parse_word("strands=2 s1 S1"), 2);
  EXPECT_EQ(framing_correct(flat).value, flat.value);
  EXPECT_TRUE(framing_correct(evaluate(parse_word("strands=2 t1 s1"), 2)).framing_caveat);
}

TEST(Framing, StabilizationInvariance) {
  for (int c : {2, 4}) {
    const auto one = framing_correct(evaluate(parse_word("strands=1"), c));
    const auto two = framing_correct(evaluate(parse_word("strands=2 s1"), c));
    const auto neg = framing_correct(evaluate(parse_word("strands=2 S1"), c));
    EXPECT_EQ(one.value, two.value) << c;
    EXPECT_EQ(one.value, neg.value) << c;
  }
}

TEST(ClosedForms, ExampleOneDisplayAtNOne) {
  // -A^-5 (A Delta_2 + A^-1 Delta_2^2 / Delta_1)
  const RationalFn expected =
      RationalFn(-Ap(-5)) * (RationalFn(Ap(1) * delta(2)) + RationalFn(Ap(-1) * delta(2) * delta(2), delta(1)));
  EXPECT_EQ(closed_form_example1(1), expected);
}

TEST(ClosedForms, ExampleOneReindexedMatchesEvaluation) {
  for (int n : {1, 2}) EXPECT_EQ(value("strands=2 t1 s1", 2 * n), closed_form_example1_reindexed(n)) << n;
}

TEST(ClosedForms, ExampleOneDisplayDiffersByMonomial) {
  // The literal display is off from the closure by A^{-6n^2-4n}.
  for (int n : {1, 2}) {
    EXPECT_NE(value("strands=2 t1 s1", 2 * n), closed_form_example1(n));
    EXPECT_EQ(RationalFn(Ap(-6 * n * n - 4 * n)) * value("strands=2 t1 s1", 2 * n), closed_form_example1(n));
  }
}

TEST(ClosedForms, ExampleTwoMatchesEvaluation) {
  for (int n : {1, 2}) EXPECT_EQ(value("strands=2 t1 s1 s1", 2 * n), closed_form_example2(n)) << n;
}

TEST(ConnectedSum, UnitAndTrefoil) {
  const auto unknot = parse_word("strands=1");
  const auto trefoil = parse_word("strands=2 s1 s1 s1");
  const auto uu = connected_sum_check(unknot, unknot, 2);
  EXPECT_TRUE(uu.holds);
  EXPECT_EQ(uu.lhs, RationalFn(delta(2) * delta(2)));
  const auto tu = connected_sum_check(trefoil, unknot, 2);
  EXPECT_TRUE(tu.holds);
  EXPECT_EQ(tu.lhs, RationalFn(delta(2)) * value("strands=2 s1 s1 s1", 2));
  const auto tt = connected_sum_check(trefoil, trefoil, 2);
  EXPECT_TRUE(tt.holds);
  EXPECT_EQ(tt.sum_word.to_string(), "strands=3 s1 s1 s1 s2 s2 s2");
  EXPECT_THROW(connected_sum_check(parse_word("strands=2"), trefoil, 2), Error);
}

TEST(Integrality, Reports) {
  const auto classical = integrality_check(parse_word("strands=2 s1 s1 s1"), 2);
  EXPECT_EQ(classical.singular_count, 0);
  EXPECT_TRUE(classical.integral);
  EXPECT_EQ(classical.scaled, classical.raw);

  const auto one = integrality_check(parse_word("strands=2 t1 s1"), 2);
  EXPECT_EQ(one.scaled, RationalFn(Ap(2) + Ap(-2)) * one.raw);
  EXPECT_FALSE(as_laurent(one.raw));
  EXPECT_TRUE(one.integral);
  ASSERT_TRUE(one.witness.has_value());
  EXPECT_EQ(RationalFn(*one.witness), one.scaled);

  const auto ev = integrality_evidence(parse_word("strands=2 t1 t1"), 2);
  EXPECT_FALSE(ev.instance.empty());
  EXPECT_FALSE(ev.value.empty());
}

TEST(Integrality, ExpansionSummandsSumToInvariant) {
  const auto trefoil = parse_word("strands=2 s1 s1 s1");
  const auto summands = crossing_expansion_summands(trefoil, 2);
  ASSERT_EQ(summands.size(), 3u);
  RationalFn total;
  for (const auto& s : summands) total += s.product;
  EXPECT_EQ(total, value("strands=2 s1 s1 s1", 2));
  // The outer summands are closed projector-colored links.
  EXPECT_TRUE(as_laurent(summands.front().skein_value));
  EXPECT_TRUE(as_laurent(summands.back().skein_value));
}

TEST(Identities, ColorTwoCrossing) { EXPECT_TRUE(check_color2_crossing().holds); }

TEST(Identities, VertexIdentitiesAtColorTwo) {
  EXPECT_TRUE(check_twist_negative(2).holds);
  EXPECT_TRUE(check_twist_positive(2).holds);
  EXPECT_TRUE(check_vertex_conjugation(2).holds);
  EXPECT_TRUE(check_vertex_internal_projectors(2).holds);
}

TEST(Identities, TwistFactorSignsAreNotInterchangeable) {
  // Swapping the twist factors must break the identities.
  const TLElement lhs = cabled_crossing(2, Sign::Negative) * singular_vertex(2);
  EXPECT_NE(lhs, side_crossed_vertex(2, Sign::Negative).scaled(vertex_twist_factor(1, -1)));
}

TEST(Identities, CrossingExpansions) {
  for (int c = 1; c <= 3; ++c) {
    EXPECT_TRUE(c_expansion_check(c, Sign::Negative).holds) << c;
    EXPECT_TRUE(c_expansion_check(c, Sign::Positive).holds) << c;
    EXPECT_TRUE(d_expansion_check(c).holds) << c;
  }
  // At color 1 the expansion is the bracket relation itself.
  EXPECT_EQ(crossing_expansion(1, Sign::Positive), elementary_crossing(Sign::Positive));
}

TEST(Oracle, Chebyshev) {
  EXPECT_EQ(oracle::chebyshev(0), (std::vector<long>{1}));
  EXPECT_EQ(oracle::chebyshev(2), (std::vector<long>{-1, 0, 1}));
  EXPECT_EQ(oracle::chebyshev(4), (std::vector<long>{1, 0, -3, 0, 1}));
}

TEST(Oracle, AgreesWithEvaluation) {
  for (const char* text : {"strands=1", "strands=2 s1 s1 s1", "strands=3 s1 S2 s1 S2", "strands=2 S1 S1 S1",
                           "strands=2 s1 s1", "strands=3"}) {
    const auto w = parse_word(text);
    const auto o = oracle::colored_bracket(w, 2);
    EXPECT_EQ(RationalFn(o.blackboard), evaluate(w, 2).value) << text;
    if (w.component_count() == 1) EXPECT_EQ(RationalFn(o.zero_framed), framing_correct(evaluate(w, 2)).value) << text;
  }
}

TEST(Oracle, ColorOneIsTheBracket) {
  // Unknot with one curl: -A^3 times the unknot value d.
  const auto o = oracle::colored_bracket(parse_word("strands=2 s1"), 1);
  EXPECT_EQ(o.blackboard, -Ap(3) * loop_value());
  EXPECT_EQ(o.zero_framed, loop_value());
}

TEST(Oracle, Limits) {
  EXPECT_THROW(oracle::colored_bracket(parse_word("strands=2 t1"), 2), Error);
  EXPECT_THROW(oracle::colored_bracket(parse_word("strands=2 s1 s1 s1 s1 s1 s1 s1"), 2), BoundExceeded);
}

}  // namespace
