#include "pretab/projective.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pretab/unify.hpp"

using namespace pretab;

TEST(ProjectiveCheck, IdentityOnExcludedMiddleOfBoxes) {
  const auto r = projective_check(Logic::PM2, Substitution{}, parse("[]x | []~x"));
  EXPECT_FALSE(r.unifies);
  ASSERT_EQ(r.checks.size(), 1U);
  EXPECT_EQ(r.checks[0].verdict, MembershipVerdict::Kind::Valid);
  EXPECT_FALSE(r.certified);
}

TEST(ProjectiveCheck, TautologyIsVacuous) {
  const auto r = projective_check(Logic::PM4, Substitution{}, Formula::top());
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.checks.empty());
}

TEST(ProjectiveCheck, GroundUnifiersOfExamplesAreNotProjective) {
  Substitution bot;
  bot.set("x", Formula::bot());
  EXPECT_FALSE(projective_check(Logic::PM2, bot, parse("[]x | []~x")).certified);
  Substitution top2;
  top2.set("x1", Formula::top());
  top2.set("x2", Formula::top());
  EXPECT_FALSE(projective_check(Logic::PM3, top2, schema::lemmon()).certified);
}

TEST(Pm4, GuardedShapeOnSimpleFormulas) {
  for (const char* t : {"p", "[]p"}) {
    const auto r = pm4_projective_unifier(parse(t));
    EXPECT_TRUE(r.certified) << t;
    EXPECT_EQ(r.construction, "guarded") << t;
  }
  const auto r = pm4_projective_unifier(parse("p"));
  EXPECT_EQ(r.unifier.at("p"), parse("[]p & p | <>~p & true"));
  EXPECT_THROW(pm4_projective_unifier(parse("x & ~x")), NotUnifiableError);
}

TEST(Pm4, GuardedShapeFailsOnBoxedExcludedMiddle) {
  const Formula phi = parse("[]p | []~p");
  Substitution gu;
  gu.set("p", Formula::bot());
  const auto direct = projective_check(Logic::PM4, guarded_substitution(phi, gu), phi);
  EXPECT_FALSE(direct.unifies);
  // The refutation lives on Y_1 with p true only at the top.
  const Formula image = guarded_substitution(phi, gu).apply(phi);
  const auto v = member(Logic::PM4, image);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.frame_param, 1);

  const auto r = pm4_projective_unifier(phi);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.construction, "iterated");
}

TEST(Pm5, DzikShapes) {
  const auto a = pm5_mgu(parse("x"));
  EXPECT_TRUE(a.certified);
  EXPECT_EQ(a.construction, "dzik");
  EXPECT_EQ(a.unifier.at("x"), parse("[]x -> x"));
  const auto b = pm5_mgu(parse("~x"));
  EXPECT_TRUE(b.certified);
  EXPECT_EQ(b.unifier.at("x"), parse("[]~x & x"));
  EXPECT_TRUE(pm5_mgu(parse("x | ~x")).certified);
}

TEST(Pm1, SimpleCandidates) {
  EXPECT_TRUE(pm1_projective_unifier(parse("p")).certified);
  const auto r = pm1_projective_unifier(parse("[]p | []~p"));
  EXPECT_TRUE(r.certified) << r.construction << " " << r.note;
  EXPECT_THROW(pm1_projective_unifier(parse("x & ~x")), NotUnifiableError);
}

TEST(Dispatch, RejectsNonProjectiveLogics) {
  EXPECT_THROW(projective_unifier(Logic::PM2, parse("p")), std::invalid_argument);
}

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  auto sub = [&] { return random_formula(rng, depth - 1); };
  switch (pick(rng)) {
    case 0:
    case 1: return Formula::var(rng() % 2 ? "x" : "y");
    case 2: return Formula::neg(sub());
    case 3: return Formula::conj(sub(), sub());
    case 4: return Formula::disj(sub(), sub());
    case 5: return Formula::implies(sub(), sub());
    case 6: return Formula::box(sub());
    default: return Formula::diamond(sub());
  }
}

}  // namespace

// Every construction certifies, and every ground unifier factors through it
// by a constant witness.
TEST(ProjectiveProperty, RandomUnifiableFormulas) {
  std::mt19937 rng(314);
  for (Logic logic : {Logic::PM1, Logic::PM4, Logic::PM5}) {
    int done = 0;
    while (done < 15) {
      const Formula phi = random_formula(rng, 3);
      const auto sweep = ground_unifiers(logic, phi);
      if (sweep.unifiers.empty() || phi.vars().empty()) continue;
      ++done;
      const auto r = projective_unifier(logic, phi);
      ASSERT_TRUE(r.certified) << to_string(logic) << " " << phi << " " << r.note;
      for (const auto& gu : sweep.unifiers) {
        const auto v = more_general(logic, r.unifier, gu, phi.vars());
        EXPECT_TRUE(v.more_general()) << to_string(logic) << " " << phi << " " << gu.str();
        EXPECT_EQ(v.note, "constant witness");
      }
    }
  }
}

TEST(Projective, OtherGroundUnifierRescuesClosedForm) {
  // With the canonical gu {x, y -> false, z -> true} the closed form does not
  // unify; the same shape with another ground unifier does.
  const Formula phi = parse("(<>x -> z & y) & z");
  const Substitution canonical = canonical_ground_unifier(Logic::PM1, phi);
  EXPECT_FALSE(projective_check(Logic::PM1, guarded_substitution(phi, canonical), phi).unifies);
  const auto r = pm1_projective_unifier(phi);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.construction, "guarded");
  EXPECT_NE(r.note.find("canonical ground unifier failed"), std::string::npos);
}
