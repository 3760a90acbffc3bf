// Copyright 2026 The Seqgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqgame/solver.h"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "seqgame/oracle.h"
#include "seqgame/preferences.h"
#include "seqgame/text_format.h"
#include "support/random_instances.h"

namespace seqgame {
namespace {

using ::seqgame::testing::AgentPool;
using ::seqgame::testing::GameShape;
using ::seqgame::testing::OutcomePool;
using ::seqgame::testing::RandomAcyclic;
using ::seqgame::testing::RandomGame;
using ::seqgame::testing::RandomRelation;
using ::seqgame::testing::RandomTotalOrder;
using ::seqgame::testing::Rng;

const AgentId kA("a");
const AgentId kB("b");

OutcomeId O(const char* name) { return OutcomeId(name); }

PayoffTable TwoAgentTable(
    std::initializer_list<std::tuple<const char*, int, int>> rows) {
  PayoffTable t;
  for (const auto& [o, pa, pb] : rows) {
    t.Set(O(o), kA, pa);
    t.Set(O(o), kB, pb);
  }
  return t;
}

PreferenceFamily OnePair() {
  PreferenceFamily f;
  const std::vector<Relation::Pair> pairs = {{O("oc3"), O("oc2")}};
  f.Set(kA, Relation::FromPairs(pairs));
  return f;
}

PreferenceFamily OrderFamily(const std::vector<OutcomeId>& ranking) {
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < ranking.size(); ++i)
    for (std::size_t j = i + 1; j < ranking.size(); ++j)
      pairs.emplace_back(ranking[i], ranking[j]);
  PreferenceFamily f;
  f.Set(kA, Relation::FromPairs(pairs));
  return f;
}

bool Divides(int x, int y) { return y % x == 0; }

TEST(ChooseAndSplitTest, Singleton) {
  const std::vector<int> items = {7};
  auto split = ChooseAndSplit<int>(Divides, items);
  EXPECT_TRUE(split.left.empty());
  EXPECT_EQ(split.choice, 7);
  EXPECT_TRUE(split.right.empty());
}

TEST(ChooseAndSplitTest, Divisibility) {
  const std::vector<int> items = {2, 3, 9, 4, 9, 6, 2, 16};
  auto split = ChooseAndSplit<int>(Divides, items);
  EXPECT_EQ(split.left, (std::vector<int>{2, 3, 9, 4}));
  EXPECT_EQ(split.choice, 9);
  EXPECT_EQ(split.right, (std::vector<int>{6, 2, 16}));
}

TEST(ChooseAndSplitTest, EmptyThrows) {
  const std::vector<int> items;
  EXPECT_THROW(ChooseAndSplit<int>(Divides, items), EmptyList);
}

TEST(ChooseAndSplitPropertyTest, ConjunctsHold) {
  Rng rng(501);
  const auto pool = OutcomePool(5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool ordered = trial % 2 == 0;
    Relation r = ordered ? RandomTotalOrder(rng, pool)
                         : RandomRelation(rng, pool, 0.3);
    std::vector<OutcomeId> items;
    for (int k = len(rng); k > 0; --k) items.push_back(pool[pick(rng)]);
    auto split = ChooseAndSplit<OutcomeId>(r, items);
    std::vector<OutcomeId> joined = split.left;
    joined.push_back(split.choice);
    joined.insert(joined.end(), split.right.begin(), split.right.end());
    ASSERT_EQ(joined, items);
    ASSERT_TRUE(IsNoSucc<OutcomeId>(r, split.choice, split.right));
    for (std::size_t i = 0; i < split.left.size(); ++i) {
      std::span<const OutcomeId> after(items.begin() + i + 1, items.end());
      ASSERT_FALSE(IsNoSucc<OutcomeId>(r, items[i], after));
    }
    if (ordered) {
      ASSERT_TRUE(IsNoSucc<OutcomeId>(r, split.choice, split.left));
      ASSERT_TRUE(IsNoSucc<OutcomeId>(r, split.choice, items));
    }
  }
}

TEST(BackwardInductionTest, LeafIsUnchanged) {
  EXPECT_EQ(BackwardInduction(Game::Leaf(O("x")), PreferenceFamily()),
            StrategyProfile::Leaf(O("x")));
}

TEST(BackwardInductionTest, TwoAgentIntro) {
  PayoffTable t = TwoAgentTable({{"o10", 1, 0}, {"o31", 3, 1}, {"o22", 2, 2}});
  PreferenceFamily f;
  f.Set(kA, Selfish(t, kA));
  f.Set(kB, Selfish(t, kB));
  StrategyProfile s = BackwardInduction(ParseGame("(a (b o10 o31) o22)"), f);
  EXPECT_EQ(PrintProfile(s), "(a *(b o10 *o31) o22)");
}

TEST(BackwardInductionTest, FourLeafSelfish) {
  PayoffTable t = TwoAgentTable({{"o10", 1, 0},
                                 {"o02", 0, 2},
                                 {"o31", 3, 1},
                                 {"o22", 2, 2},
                                 {"o41", 4, 1}});
  PreferenceFamily f;
  f.Set(kA, Selfish(t, kA));
  f.Set(kB, Selfish(t, kB));
  StrategyProfile s =
      BackwardInduction(ParseGame("(a (b (a o10 o02) o31) (b o22 o41))"), f);
  EXPECT_EQ(PrintProfile(s), "(a *(b (a *o10 o02) *o31) (b *o22 o41))");
  EXPECT_EQ(InducedOutcome(s), O("o31"));
  EXPECT_TRUE(IsSpe(f, s));
}

TEST(BackwardInductionTest, LeftmostChoiceUnderPartialOrder) {
  // Only oc2 over oc3 is known: the inner node keeps oc1 and the root keeps
  // the inner subgame.
  StrategyProfile s =
      BackwardInduction(ParseGame("(a (a oc1 oc2) oc3)"), OnePair());
  EXPECT_EQ(PrintProfile(s), "(a *(a *oc1 oc2) oc3)");
  EXPECT_TRUE(IsNash(OnePair(), s));
}

TEST(BackwardInductionTest, PartialOrderCanMissNash) {
  Game g = ParseGame("(a oc3 (a oc1 oc2))");
  StrategyProfile s = BackwardInduction(g, OnePair());
  EXPECT_EQ(PrintProfile(s), "(a *oc3 (a *oc1 oc2))");
  EXPECT_EQ(InducedOutcome(s), O("oc3"));
  EXPECT_FALSE(IsNash(OnePair(), s));
  StrategyProfile fixed = SolveSpe(g, OnePair());
  EXPECT_TRUE(IsSpe(OnePair(), fixed));
}

TEST(BackwardInductionTest, SelfishnessRefinements) {
  PayoffTable t1 = TwoAgentTable({{"o02", 0, 2}, {"o22", 2, 2}, {"o11", 1, 1}});
  PayoffTable t2 = TwoAgentTable(
      {{"o00", 0, 0}, {"o03", 0, 3}, {"o22", 2, 2}, {"o11", 1, 1}});
  auto family = [](const PayoffTable& t, bool benevolent) {
    PreferenceFamily f;
    for (AgentId a : {kA, kB}) {
      f.Set(a, benevolent ? SelfishBenevolent(t, a, {kA, kB})
                          : SelfishMalevolent(t, a, {kA, kB}));
    }
    return f;
  };
  Game g1 = ParseGame("(a (b o02 o22) o11)");
  Game g2 = ParseGame("(a (b (a o00 o03) o22) o11)");
  EXPECT_EQ(PrintProfile(BackwardInduction(g1, family(t1, true))),
            "(a *(b o02 *o22) o11)");
  EXPECT_EQ(PrintProfile(BackwardInduction(g1, family(t1, false))),
            "(a (b *o02 o22) *o11)");
  EXPECT_EQ(PrintProfile(BackwardInduction(g2, family(t2, true))),
            "(a (b *(a o00 *o03) o22) *o11)");
  EXPECT_EQ(PrintProfile(BackwardInduction(g2, family(t2, false))),
            "(a *(b (a *o00 o03) *o22) o11)");
}

TEST(SolveSpeTest, ExtensionOfOnePair) {
  Game g = ParseGame("(a (a oc1 oc2) oc3)");
  SpeSolution sol = SolveSpeDetailed(g, OnePair());
  ASSERT_EQ(sol.orders.size(), 1u);
  EXPECT_EQ(sol.orders[0].first, kA);
  EXPECT_EQ(sol.orders[0].second,
            (std::vector<OutcomeId>{O("oc1"), O("oc3"), O("oc2")}));
  EXPECT_EQ(PrintProfile(sol.profile), "(a *(a oc1 *oc2) oc3)");
  EXPECT_TRUE(IsSpe(OnePair(), sol.profile));
}

TEST(SolveSpeTest, EveryLinearExtensionGivesSpe) {
  Game g = ParseGame("(a (a oc1 oc2) oc3)");
  const std::vector<std::vector<OutcomeId>> rankings = {
      {O("oc1"), O("oc3"), O("oc2")},
      {O("oc3"), O("oc1"), O("oc2")},
      {O("oc3"), O("oc2"), O("oc1")}};
  for (const auto& ranking : rankings) {
    StrategyProfile s = BackwardInduction(g, OrderFamily(ranking));
    EXPECT_TRUE(IsSpe(OnePair(), s)) << PrintProfile(s);
  }
}

TEST(SolveSpeTest, CyclicPreferenceReported) {
  PreferenceFamily f;
  const std::vector<Relation::Pair> pairs = {{O("x"), O("y")},
                                             {O("y"), O("x")}};
  f.Set(kA, Relation::FromPairs(pairs));
  try {
    SolveSpe(ParseGame("(a x y)"), f);
    FAIL() << "expected CyclicPreference";
  } catch (const CyclicPreference& e) {
    EXPECT_EQ(e.agent(), kA);
    EXPECT_EQ(e.cycle().nodes.size(), 2u);
  }
  // Cycles over unused outcomes do not matter.
  EXPECT_NO_THROW(SolveSpe(ParseGame("(a x z)"), f));
}

TEST(SolveSpePropertyTest, TotalOrdersMatchBackwardInduction) {
  Rng rng(502);
  GameShape shape;
  shape.max_profiles = 5000;
  const auto outcomes = OutcomePool(shape.outcomes);
  for (int trial = 0; trial < 200; ++trial) {
    Game g = RandomGame(rng, shape);
    PreferenceFamily f;
    for (AgentId a : AgentPool(shape.agents)) {
      f.Set(a, RandomTotalOrder(rng, outcomes));
    }
    StrategyProfile bi = BackwardInduction(g, f);
    ASSERT_EQ(UnderlyingGame(bi), g);
    ASSERT_TRUE(IsSpe(f, bi));
    ASSERT_EQ(SolveSpe(g, f), bi);
  }
}

TEST(SolveSpePropertyTest, AcyclicGivesSpeAndNash) {
  Rng rng(503);
  GameShape shape;
  shape.max_profiles = 5000;
  const auto outcomes = OutcomePool(shape.outcomes);
  for (int trial = 0; trial < 300; ++trial) {
    Game g = RandomGame(rng, shape);
    PreferenceFamily f;
    for (AgentId a : AgentPool(shape.agents)) {
      f.Set(a, RandomAcyclic(rng, outcomes));
    }
    StrategyProfile s = SolveSpe(g, f);
    ASSERT_EQ(UnderlyingGame(s), g);
    ASSERT_TRUE(IsSpe(f, s));
    ASSERT_TRUE(IsNash(f, s));
  }
}

TEST(NoEquilibriumGameTest, FlatGameOverCycle) {
  CyclePath cycle{{O("x0"), O("x1")}};
  Game g = NoEquilibriumGame(kA, cycle);
  EXPECT_EQ(PrintGame(g), "(a x0 x1)");
  PreferenceFamily f;
  const std::vector<Relation::Pair> pairs = {{O("x0"), O("x1")},
                                             {O("x1"), O("x0")}};
  f.Set(kA, Relation::FromPairs(pairs));
  EXPECT_TRUE(FindEquilibria(g, f, EquilibriumFilter::kNash).empty());
  EXPECT_THROW(NoEquilibriumGame(kA, CyclePath{}), EmptyCycle);
}

TEST(NoEquilibriumGameTest, SelfLoopGivesOneLeaf) {
  Game g = NoEquilibriumGame(kA, CyclePath{{O("x")}});
  EXPECT_EQ(PrintGame(g), "(a x)");
}

}  // namespace
}  // namespace seqgame
