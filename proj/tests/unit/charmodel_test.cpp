#include "pretab/charmodel.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pretab/decision.hpp"

using namespace pretab;

TEST(CharModel, Sizes) {
  const auto t12 = build_char_model(1, 2);
  EXPECT_EQ(t12.layer(1).size(), 2U);
  EXPECT_EQ(t12.layer(2).size(), 4U);
  EXPECT_EQ(build_char_model(2, 2).size(), 4 + 15 * 4 - 4);
  EXPECT_EQ(build_char_model(1, 3).size(), 6);
  EXPECT_EQ(build_char_model(2, 3).size(), 116);
  EXPECT_THROW(build_char_model(3, 3), CharModelTooLarge);
  EXPECT_THROW(build_char_model(4, 2), CharModelTooLarge);
}

TEST(CharModel, RelationIsPreorder) {
  for (int layers : {2, 3}) {
    const auto cm = build_char_model(2, layers);
    EXPECT_TRUE(cm.model.frame.is_reflexive());
    EXPECT_TRUE(cm.model.frame.is_transitive());
  }
}

TEST(CharModel, BoxedExcludedMiddleFailsWhereBothValuesAreSeen) {
  const auto cm = build_char_model(std::vector<std::string>{"x"}, 2);
  const WorldSet ts = truth_set(cm.model, parse("[]x | []~x"));
  for (const auto& c : cm.clusters) {
    // Refuted exactly where both values of x are visible.
    unsigned seen = 1U << c.valuation;
    for (int u : c.antichain) seen |= 1U << cm.clusters[u].valuation;
    EXPECT_EQ(ts.test(c.id), seen != 3U) << c.id;
  }
}

TEST(CharModel, DefiningFormulasAreExact) {
  for (auto [n, layers] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const auto cm = build_char_model(n, layers);
    for (const auto& c : cm.clusters) {
      const WorldSet ts = truth_set(cm.model, cluster_defining_formula(cm, c.id));
      EXPECT_EQ(ts.count(), 1) << n << "/" << layers << " point " << c.id;
      EXPECT_TRUE(ts.test(c.id));
    }
  }
  const auto cm = build_char_model(1, 2);
  EXPECT_EQ(cluster_defining_formula(cm, 1), parse("p1 & [](p1)"));
  EXPECT_THROW(cluster_defining_formula(cm, 99), UnknownWorldError);
}

TEST(CharModel, DumpFormat) {
  std::ostringstream os;
  write_char_model(os, build_char_model(1, 2));
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("worlds: 6\n", 0), 0U);
  EXPECT_NE(s.find("cluster: {}\ncluster: {p1}\n"), std::string::npos);
}

namespace {

Formula random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  auto sub = [&] { return random_formula(rng, depth - 1, vars); };
  switch (pick(rng)) {
    case 0:
    case 1: return Formula::var(vars[rng() % vars.size()]);
    case 2: return Formula::neg(sub());
    case 3: return Formula::conj(sub(), sub());
    case 4: return Formula::disj(sub(), sub());
    case 5: return Formula::implies(sub(), sub());
    case 6: return Formula::box(sub());
    default: return Formula::diamond(sub());
  }
}

}  // namespace

TEST(CharModelProperty, AgreesWithMembership) {
  std::mt19937 rng(5);
  const std::vector<std::string> vars{"p1", "p2"};
  for (auto [logic, layers] : {std::pair{Logic::PM2, 2}, {Logic::PM3, 3}}) {
    const auto cm = build_char_model(2, layers);
    int valid = 0;
    for (int i = 0; i < 300; ++i) {
      const Formula phi = random_formula(rng, 4, vars);
      const bool in_logic = member(logic, phi).valid();
      valid += in_logic;
      EXPECT_EQ(valid_in_char_model(cm, phi), in_logic) << to_string(logic) << " " << phi;
    }
    EXPECT_GT(valid, 10);
  }
}
