#include "pretab/unify.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace pretab;

namespace {

Substitution subst(std::initializer_list<std::pair<const char*, const char*>> items) {
  Substitution s;
  for (const auto& [v, f] : items) s.set(v, parse(f));
  return s;
}

}  // namespace

TEST(Ground, CanonicalOrder) {
  const auto sweep = ground_unifiers(Logic::PM5, parse("x | y"));
  ASSERT_EQ(sweep.unifiers.size(), 3U);
  EXPECT_EQ(sweep.examined, 4U);
  EXPECT_EQ(sweep.unifiers[0], subst({{"x", "false"}, {"y", "true"}}));
  EXPECT_EQ(sweep.unifiers[1], subst({{"x", "true"}, {"y", "false"}}));
  EXPECT_EQ(sweep.unifiers[2], subst({{"x", "true"}, {"y", "true"}}));
}

TEST(Ground, MatchesClassicalTruthTable) {
  // Constant instances of a formula collapse to their classical value.
  for (const char* t : {"[]x | []~x", "x & ~x", "[](x -> <>y) & ~[]y", "<>x <-> []~y"}) {
    const Formula phi = parse(t);
    const auto sweep = ground_unifiers(Logic::PM2, phi);
    std::size_t want = 0;
    for (int code = 0; code < (1 << phi.vars().size()); ++code) {
      std::map<std::string, bool> a;
      int i = static_cast<int>(phi.vars().size()) - 1;
      for (const auto& v : phi.vars()) a[v] = (code >> i--) & 1;
      want += oracle::classical(phi, a);
    }
    EXPECT_EQ(sweep.unifiers.size(), want) << t;
    EXPECT_TRUE(sweep.undecided.empty());
  }
}

TEST(IsUnifier, Basics) {
  EXPECT_TRUE(is_unifier(Logic::PM2, subst({{"x", "true"}}), parse("[]x | []~x")));
  EXPECT_FALSE(is_unifier(Logic::PM2, Substitution{}, parse("[]x | []~x")));
  EXPECT_TRUE(is_unifier(Logic::PM5, Substitution{}, parse("[]x | []~[]x")));
  MemberOptions tiny;
  tiny.budget = 1;
  EXPECT_THROW(is_unifier(Logic::PM5, Substitution{}, parse("[]x | [](y -> z)"), tiny),
               BudgetExceededError);
}

TEST(MoreGeneral, IdentityIsMostGeneral) {
  const auto v = more_general(Logic::PM4, Substitution{}, subst({{"x", "[]y & z"}}), {"x"});
  ASSERT_TRUE(v.more_general()) << v.note;
  EXPECT_EQ(v.witness->at("x"), parse("[]y & z"));
}

TEST(MoreGeneral, ConstantWitness) {
  const auto v = more_general(Logic::PM2, subst({{"x", "[]x"}}), subst({{"x", "true"}}), {"x"});
  ASSERT_TRUE(v.more_general());
  EXPECT_EQ(v.note, "constant witness");
}

TEST(MoreGeneral, GroundUnifiersAreIncomparable) {
  for (Logic logic : {Logic::PM2, Logic::PM3}) {
    const auto v = more_general(logic, subst({{"x", "true"}}), subst({{"x", "false"}}), {"x"});
    EXPECT_FALSE(v.more_general());
    EXPECT_TRUE(v.refuted) << v.note;
  }
}

TEST(MoreGeneral, SemanticWitnessFound) {
  // Needs sigma2(x) equivalent to p; neither constants nor specific itself work.
  const Substitution general = subst({{"x", "[]x"}, {"y", "<>x"}});
  const Substitution specific = subst({{"x", "[]p"}, {"y", "<>p"}});
  GeneralityOptions o;
  const auto v = more_general(Logic::PM2, general, specific, {"x", "y"}, o);
  ASSERT_TRUE(v.more_general()) << v.note;
  EXPECT_TRUE(equivalent(Logic::PM2, v.witness->apply(general.at("y")), specific.at("y")));
}

TEST(MoreGeneral, SemanticRefutationIsExact) {
  // Every image of []x is boxed, and no boxed formula is equivalent to <>p.
  const auto v = more_general(Logic::PM2, subst({{"x", "[]x"}}), subst({{"x", "<>p"}}), {"x"});
  EXPECT_FALSE(v.more_general());
  EXPECT_TRUE(v.refuted) << v.note;
}

TEST(Minimize, KeepsMostGeneral) {
  const std::vector<Substitution> set{subst({{"x", "true"}}), subst({{"x", "[]x"}}),
                                      subst({{"x", "false"}}), subst({{"x", "[][]x"}})};
  const auto out = minimize_set(Logic::PM2, set, {"x"});
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0], subst({{"x", "[]x"}}));
}

TEST(Minimize, IncomparablePairSurvives) {
  const std::vector<Substitution> set{subst({{"x", "true"}}), subst({{"x", "false"}})};
  EXPECT_EQ(minimize_set(Logic::PM2, set, {"x"}).size(), 2U);
}

// Ground substitutions: one is more general than another iff they agree.
TEST(MoreGeneralProperty, GroundPairs) {
  const std::vector<std::string> vars{"x", "y"};
  for (Logic logic : kAllLogics) {
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = 0; b < 4; ++b) {
        const auto v = more_general(logic, ground_substitution(vars, a),
                                    ground_substitution(vars, b), {"x", "y"});
        EXPECT_EQ(v.more_general(), a == b) << to_string(logic) << a << b;
      }
    }
  }
}

// The exact stage never refutes a pair for which the syntactic search has a
// witness, and every witness it reports is certified.
TEST(MoreGeneralProperty, SemanticConsistentWithSyntactic) {
  std::mt19937 rng(99);
  const std::vector<std::string> shapes{"x",      "[]x",        "<>x",      "~x",
                                        "[]<>x",  "<>[]x",      "x & []x",  "x | <>~x",
                                        "true",   "false",      "[]~x",     "<>x -> x"};
  for (Logic logic : {Logic::PM2, Logic::PM3}) {
    for (int i = 0; i < 40; ++i) {
      const Substitution g = subst({{"x", shapes[rng() % shapes.size()].c_str()}});
      const Substitution s = subst({{"x", shapes[rng() % shapes.size()].c_str()}});
      GeneralityOptions with;
      GeneralityOptions without;
      without.semantic = false;
      const auto a = more_general(logic, g, s, {"x"}, with);
      const auto b = more_general(logic, g, s, {"x"}, without);
      if (b.more_general()) EXPECT_TRUE(a.more_general()) << g.str() << " vs " << s.str();
      if (a.more_general()) {
        EXPECT_TRUE(equivalent(logic, a.witness->apply(g.at("x")), s.at("x")));
      }
    }
  }
}
