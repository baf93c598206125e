#include <gtest/gtest.h>

#include <sstream>

#include "skein/cli.hpp"

using namespace skein;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  const int status = cli::run(args, out, err, in);
  return {status, out.str(), err.str()};
}

TEST(Json, LaurentPolyWireForm) {
  const LaurentPoly p = delta(2);
  const json j = p;
  EXPECT_EQ(j.dump(), R"([[-4,"1"],[0,"1"],[4,"1"]])");
  EXPECT_EQ(j.get<LaurentPoly>(), p);
  LaurentPoly big = 1;
  for (int k = 0; k < 80; ++k) big *= LaurentPoly::A(1) + LaurentPoly(3);
  EXPECT_EQ(json(big).get<LaurentPoly>(), big);
}

TEST(Json, RoundTrips) {
  const RationalFn r(delta(2), delta(1));
  EXPECT_EQ(json(r).get<RationalFn>(), r);
  const json m = Matching::identity(2);
  EXPECT_EQ(m.dump(), "[2,3,0,1]");
  EXPECT_EQ(m.get<Matching>(), Matching::identity(2));
  const TLElement& f = jones_wenzl(4);
  EXPECT_EQ(json(f).get<TLElement>(), f);
  const auto w = parse_word("strands=3 s1 S2 t1");
  EXPECT_EQ(json(w).dump(), R"({"letters":[["s",1],["S",2],["t",1]],"strands":3})");
  EXPECT_EQ(json(w).get<SingularBraidWord>(), w);
  const auto res = framing_correct(evaluate(parse_word("strands=2 t1 s1"), 2));
  EXPECT_EQ(json(res).get<InvariantResult>(), res);
  const auto rep = integrality_check(parse_word("strands=2 t1 s1"), 2);
  const auto back = json(rep).get<IntegralityReport>();
  EXPECT_EQ(back.scaled, rep.scaled);
  EXPECT_EQ(back.witness, rep.witness);
  EXPECT_EQ(json(back).dump(), json(rep).dump());
}

TEST(Json, TermsSortedByPairing) {
  const json j = jones_wenzl(3);
  std::vector<std::vector<int>> keys;
  for (const auto& t : j.at("terms")) keys.push_back(t.at(0).get<std::vector<int>>());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Cli, EvalUnknot) {
  const auto o = run_cli({"eval", "strands=1", "--color", "2"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, "A^4 + 1 + A^-4\n");
}

TEST(Cli, EvalJsonMatchesClosedForm) {
  const auto o = run_cli({"eval", "strands=2 t1 s1", "--color", "2", "--format", "json"});
  ASSERT_EQ(o.status, 0);
  const auto r = json::parse(o.out).get<InvariantResult>();
  EXPECT_EQ(r.value, closed_form_example1_reindexed(1));
  EXPECT_EQ(r.value, evaluate(parse_word("strands=2 t1 s1"), 2).value);
}

TEST(Cli, TextAndJsonAgree) {
  const auto text = run_cli({"eval", "strands=2 s1 s1 s1", "--framing", "zero"});
  const auto js = run_cli({"eval", "strands=2 s1 s1 s1", "--framing", "zero", "--format", "json"});
  const auto r = json::parse(js.out).get<InvariantResult>();
  EXPECT_EQ(text.out, r.value.to_string() + "\n");
  EXPECT_EQ(r.framing, Framing::Zero);
}

TEST(Cli, JsonRoundTripsBitExactly) {
  const auto o = run_cli({"integrality", "strands=2 t1 s1", "--format", "json"});
  const json j = json::parse(o.out);
  EXPECT_EQ(json(j.get<IntegralityReport>()).dump(2) + "\n", o.out);
}

TEST(Cli, StdinWord) {
  const auto o = run_cli({"eval", "-"}, "strands=1\n");
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, "A^4 + 1 + A^-4\n");
}

TEST(Cli, Relations) {
  const auto o = run_cli({"relations", "--strands", "3", "--color", "2"});
  EXPECT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("all relations hold"), std::string::npos);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(run_cli({"jw", "2"}).status, 0);
  EXPECT_EQ(run_cli({"closed-form", "ex2", "--n", "1"}).out, closed_form_example2(1).to_string() + "\n");
  EXPECT_EQ(run_cli({"identities", "--n", "1"}).status, 0);
  const auto orc = run_cli({"oracle", "strands=2 s1 s1 s1", "--framing", "zero"});
  EXPECT_EQ(orc.out, framing_correct(evaluate(parse_word("strands=2 s1 s1 s1"), 2)).value.to_string() + "\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"bogus"}).status, 2);
  EXPECT_EQ(run_cli({"eval", "strands=2 s3"}).status, 2);
  const auto parse = run_cli({"eval", "strands=2 q1"});
  EXPECT_EQ(parse.status, 2);
  EXPECT_NE(parse.err.find("byte 10"), std::string::npos);
  EXPECT_EQ(run_cli({"eval", "strands=1", "--color", "3"}).status, 2);
  EXPECT_EQ(run_cli({"eval", "strands=1", "--format", "xml"}).status, 2);
  EXPECT_EQ(run_cli({"eval", "strands=3", "--color", "6"}).status, 2);
}

}  // namespace
