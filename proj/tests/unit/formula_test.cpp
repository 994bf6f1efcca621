#include "pretab/formula.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pretab;

TEST(Formula, HashConsingGivesPointerEquality) {
  auto a = Formula::conj(Formula::var("p"), Formula::box(Formula::var("q")));
  auto b = parse("p & []q");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.node(), b.node());
  EXPECT_NE(a, parse("p | []q"));
}

TEST(Formula, PrintParseRoundTrip) {
  for (const char* text :
       {"p", "~p", "[]<>p", "p & q | r", "p -> q -> r", "(p -> q) -> r", "p <-> q",
        "[](p -> []p) -> p", "~(p & q)", "true | false", "[]x | []~x", "<>~[]q1"}) {
    const Formula f = parse(text);
    EXPECT_EQ(parse(f.str()), f) << text;
  }
  EXPECT_EQ(parse("p -> q -> r").str(), "p -> q -> r");
  EXPECT_EQ(parse("(p -> q) -> r").str(), "(p -> q) -> r");
  EXPECT_EQ(parse("p & (q | r)").str(), "p & (q | r)");
}

TEST(Formula, DiamondVersusIffTokens) {
  EXPECT_EQ(parse("p<->q").op(), Op::Iff);
  EXPECT_EQ(parse("<>q").op(), Op::Diamond);
  EXPECT_EQ(parse("p<-><>q").rhs().op(), Op::Diamond);
}

TEST(Formula, ParseErrorsCarryOffsets) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("p &"), ParseError);
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse("p q"), ParseError);
  try {
    parse("p & & q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
  }
}

TEST(Formula, Measures) {
  const Formula f = parse("[](p -> <>q) & r");
  EXPECT_EQ(f.node_count(), 7U);
  EXPECT_EQ(f.modal_depth(), 2);
  EXPECT_EQ(f.vars(), (std::set<std::string>{"p", "q", "r"}));
  EXPECT_EQ(subformulas(f).size(), 7U);
  EXPECT_EQ(subformulas(parse("p & p")).size(), 2U);
}

TEST(Formula, ConjAllDisjAllUnits) {
  EXPECT_EQ(Formula::conj_all({}), Formula::top());
  EXPECT_EQ(Formula::disj_all({}), Formula::bot());
  EXPECT_EQ(Formula::conj_all({parse("p"), parse("q")}), parse("p & q"));
}

TEST(Substitution, ApplyAndCompose) {
  Substitution s;
  s.set("p", parse("q & r"));
  EXPECT_EQ(s.apply(parse("[]p -> p | x")), parse("[](q & r) -> q & r | x"));
  Substitution t;
  t.set("q", Formula::top());
  const auto ts = t.after(s);
  EXPECT_EQ(ts.at("p"), parse("true & r"));
  EXPECT_EQ(ts.at("q"), Formula::top());
  EXPECT_EQ(ts.at("z"), parse("z"));
  EXPECT_EQ(s.range_vars({"p", "x"}), (std::set<std::string>{"q", "r", "x"}));
}

TEST(Simplify, Rules) {
  EXPECT_EQ(simplify(parse("~~p")), parse("p"));
  EXPECT_EQ(simplify(parse("p & true")), parse("p"));
  EXPECT_EQ(simplify(parse("p | ~p")), Formula::top());
  EXPECT_EQ(simplify(parse("[]true & <>false")), Formula::bot());
  EXPECT_EQ(simplify(parse("p -> false")), parse("~p"));
  EXPECT_EQ(simplify(parse("false <-> q")), parse("~q"));
  EXPECT_EQ(simplify(parse("[](p & p)")), parse("[]p"));
}

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  const int c = pick(rng);
  switch (c) {
    case 0: return Formula::var(rng() % 2 ? "p" : "q");
    case 1: return Formula::var("r");
    case 2: return Formula::constant(rng() % 2);
    case 3: return Formula::neg(random_formula(rng, depth - 1));
    case 4: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return Formula::iff(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8: return Formula::box(random_formula(rng, depth - 1));
    default: return Formula::diamond(random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST(FormulaProperty, RoundTripAndSimplifyInvariants) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(rng, 4);
    EXPECT_EQ(parse(f.str()), f) << f;
    const Formula s = simplify(f);
    EXPECT_LE(s.node_count(), f.node_count()) << f;
    EXPECT_EQ(simplify(s), s) << f;
    for (const auto& v : s.vars()) EXPECT_TRUE(f.vars().count(v)) << f;
  }
}

TEST(Names, FreshName) {
  EXPECT_EQ(fresh_name("y", {"x"}), "y");
  const auto n = fresh_name("y", {"y", "y_1"});
  EXPECT_NE(n, "y");
  EXPECT_NE(n, "y_1");
  EXPECT_TRUE(is_identifier(n));
}
