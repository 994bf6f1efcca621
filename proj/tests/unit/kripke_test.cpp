#include "pretab/kripke.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"

using namespace pretab;

TEST(Frames, FamiliesMatchDefinitions) {
  for (Logic logic : kAllLogics) {
    for (int m = 1; m <= 5; ++m) {
      const Frame f = make_frame(logic, m);
      const auto ref = oracle::family(logic, m);
      ASSERT_EQ(f.size(), ref.n) << to_string(logic) << " m=" << m;
      for (int x = 0; x < ref.n; ++x) {
        for (int y = 0; y < ref.n; ++y) EXPECT_EQ(f.related(x, y), ref.r[x][y]);
      }
      EXPECT_TRUE(f.is_reflexive());
      EXPECT_TRUE(f.is_transitive());
    }
  }
  EXPECT_THROW(make_frame(Logic::PM1, 0), std::invalid_argument);
}

TEST(Frames, FromPairsRejectsNonPreorders) {
  EXPECT_THROW(Frame::from_pairs(2, {{0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(Frame::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}));
}

TEST(Frames, ClustersAndTwins) {
  const Frame y3 = make_frame(Logic::PM4, 3);
  const auto cl = clusters(y3);
  ASSERT_EQ(cl.size(), 2U);
  EXPECT_EQ(cl[0], (Cluster{0, 1, 2}));
  EXPECT_EQ(cl[1], (Cluster{3}));
  const auto tw = twin_classes(make_frame(Logic::PM2, 3));
  ASSERT_EQ(tw.size(), 2U);
  EXPECT_EQ(tw[1], (std::vector<int>{1, 2, 3}));
}

TEST(Frames, TextRoundTrip) {
  const Frame f = make_frame(Logic::PM3, 2);
  std::stringstream ss;
  write_frame(ss, f);
  EXPECT_EQ(read_frame(ss), f);
}

TEST(Frames, Isomorphism) {
  const Frame a = Frame::from_pairs(2, {{0, 0}, {1, 1}, {1, 0}});
  EXPECT_TRUE(isomorphic(a, make_frame(Logic::PM1, 2)));
  EXPECT_FALSE(isomorphic(make_frame(Logic::PM2, 1), make_frame(Logic::PM5, 2)));
}

TEST(Frames, WeakCocoverClosure) {
  // Two leaves of V_3 with a new root form V_2.
  EXPECT_TRUE(has_weak_cocover_closure(Logic::PM2, 3, {{1}, {2}}));
  // The top of Z_3 plus a root is a two-element chain.
  EXPECT_TRUE(has_weak_cocover_closure(Logic::PM1, 3, {{2}}));
  EXPECT_THROW(has_weak_cocover_closure(Logic::PM2, 3, {}), std::invalid_argument);
  EXPECT_THROW(has_weak_cocover_closure(Logic::PM2, 3, {{0}}), std::invalid_argument);
  EXPECT_THROW(has_weak_cocover_closure(Logic::PM1, 3, {{1}, {2}}), std::invalid_argument);
}

TEST(Eval, AgreesWithOracleOnFamilies) {
  std::mt19937 rng(11);
  for (Logic logic : kAllLogics) {
    const Frame f = make_frame(logic, 2);
    const auto ref = oracle::family(logic, 2);
    for (int i = 0; i < 200; ++i) {
      const Formula phi = parse(i % 2 ? "[](p -> <>q) | <>[]~p" : "[]<>p -> <>[](p & q)");
      Valuation v;
      oracle::Val ov;
      for (const char* x : {"p", "q"}) {
        WorldSet s(f.size());
        std::vector<bool> e(f.size());
        for (int w = 0; w < f.size(); ++w) {
          const bool b = rng() & 1U;
          s.set(w, b);
          e[w] = b;
        }
        v[x] = s;
        ov[x] = e;
      }
      const FrameModel model{f, v};
      const WorldSet ts = truth_set(model, phi);
      for (int w = 0; w < f.size(); ++w) {
        EXPECT_EQ(eval(model, w, phi), oracle::holds(ref, ov, w, phi));
        EXPECT_EQ(ts.test(w), oracle::holds(ref, ov, w, phi));
      }
    }
  }
  const FrameModel m{make_frame(Logic::PM5, 2), {}};
  EXPECT_THROW(eval(m, 5, parse("p")), UnknownWorldError);
}

TEST(ValidOnFrame, AgreesWithOracle) {
  const char* texts[] = {"[]p -> p", "p -> []<>p", "[]<>p -> <>[]p", "[]p | []~p",
                         "[]([]p -> q) | []([]q -> p)", "[]([](p -> []p) -> p) -> p",
                         "<>p & <>~p -> <>(p & q)"};
  for (Logic logic : kAllLogics) {
    for (int m = 1; m <= 3; ++m) {
      for (const char* t : texts) {
        const Formula phi = parse(t);
        const auto check = valid_on_frame(make_frame(logic, m), phi);
        const bool want = oracle::frame_valid(oracle::family(logic, m), phi);
        EXPECT_EQ(check.status == FrameCheck::Status::Valid, want)
            << to_string(logic) << " m=" << m << " " << t;
        if (check.status == FrameCheck::Status::Refuted) {
          const FrameModel model{make_frame(logic, m), *check.witness};
          EXPECT_FALSE(eval(model, check.world, phi));
        }
      }
    }
  }
}

TEST(ValidOnFrame, BudgetIsReported) {
  FrameCheckOptions o;
  o.budget = 3;
  const auto c = valid_on_frame(make_frame(Logic::PM5, 3), parse("p | q | r | ~p"), o);
  EXPECT_EQ(c.status, FrameCheck::Status::BudgetExceeded);
}
