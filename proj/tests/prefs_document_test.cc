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

#include "seqgame/prefs_document.h"

#include <gtest/gtest.h>

#include "seqgame/text_format.h"

namespace seqgame {
namespace {

const AgentId kA("a");
const AgentId kB("b");

OutcomeId O(const char* name) { return OutcomeId(name); }

constexpr char kIntroPayoffs[] = R"({
  "payoffs": {
    "o10": {"a": 1, "b": 0},
    "o31": {"a": 3, "b": 1},
    "o22": {"a": 2, "b": 2}
  },)";

TEST(PrefsDocumentTest, PairsAreDirected) {
  PreferenceFamily f = ParsePrefs(
      R"({"preferences":{"a":{"kind":"pairs","pairs":[["oc3","oc2"]]}}})");
  EXPECT_TRUE(f.Declares(kA));
  EXPECT_TRUE(f.For(kA).Holds(O("oc3"), O("oc2")));
  EXPECT_FALSE(f.For(kA).Holds(O("oc2"), O("oc3")));
  EXPECT_FALSE(f.For(kA).Holds(O("oc1"), O("oc2")));
  // Unknown outcomes are simply unrelated.
  EXPECT_FALSE(f.For(kA).Holds(O("elsewhere"), O("oc2")));
}

TEST(PrefsDocumentTest, SelfishMatchesPayoffComparison) {
  PrefsDocument doc = ParsePrefsDocument(std::string(kIntroPayoffs) + R"(
    "preferences": {"a": {"kind": "selfish"}, "b": {"kind": "selfish"}}})");
  ASSERT_TRUE(doc.payoffs.has_value());
  const auto& f = doc.family;
  const StrategyProfile spe = ParseProfile("(a *(b o10 *o31) o22)");
  const StrategyProfile ne = ParseProfile("(a (b *o10 o31) *o22)");
  for (AgentId a : {kA, kB}) {
    for (OutcomeId x : doc.payoffs->outcomes()) {
      for (OutcomeId y : doc.payoffs->outcomes()) {
        EXPECT_EQ(f.For(a).Holds(x, y),
                  doc.payoffs->Get(y, a) > doc.payoffs->Get(x, a));
      }
    }
  }
  // a gets 3 under the first profile and 2 under the second.
  EXPECT_TRUE(StratPref(f, kA, ne, spe));
  EXPECT_FALSE(StratPref(f, kA, spe, ne));
}

TEST(PrefsDocumentTest, ExactDecimalPayoffs) {
  PrefsDocument doc = ParsePrefsDocument(R"({
    "payoffs": {"x": {"a": 0.3}, "y": {"a": "0.1"}, "z": {"a": 0.2}},
    "preferences": {"a": {"kind": "selfish"}}})");
  EXPECT_EQ(doc.payoffs->Get(O("y"), kA) + doc.payoffs->Get(O("z"), kA),
            doc.payoffs->Get(O("x"), kA));
  EXPECT_FALSE(doc.family.For(kA).Holds(O("x"), O("x")));
}

TEST(PrefsDocumentTest, BenevolenceRanksAllTableAgents) {
  PreferenceFamily f = ParsePrefs(R"({
    "payoffs": {"p": {"a": 1, "b": 2}, "q": {"a": 1, "b": 3}},
    "preferences": {"a": {"kind": "benevolent"}}})");
  EXPECT_TRUE(f.For(kA).Holds(O("p"), O("q")));
}

TEST(PrefsDocumentTest, SetKinds) {
  const std::string sets = R"({
    "set_payoffs": {"wide": {"a": [0, 5]}, "narrow": {"a": [1, 2, 3]}},
    "preferences": {"a": {"kind": ")";
  EXPECT_TRUE(ParsePrefs(sets + "set-min\"}}}")
                  .For(kA)
                  .Holds(O("wide"), O("narrow")));
  EXPECT_TRUE(ParsePrefs(sets + "set-max\"}}}")
                  .For(kA)
                  .Holds(O("narrow"), O("wide")));
  PreferenceFamily iv = ParsePrefs(sets + "set-interval\"}}}");
  EXPECT_FALSE(iv.For(kA).Holds(O("narrow"), O("wide")));
  EXPECT_FALSE(iv.For(kA).Holds(O("wide"), O("narrow")));
}

TEST(PrefsDocumentTest, Errors) {
  EXPECT_THROW(ParsePrefs("{"), ParseError);
  EXPECT_THROW(ParsePrefs("[]"), ParseError);
  EXPECT_THROW(ParsePrefs(R"({"preferences":{"a":{"kind":"spiteful"}}})"),
               UnknownKind);
  EXPECT_THROW(ParsePrefs(R"({"preferences":{"a":{"kind":"selfish"}}})"),
               ParseError);
  EXPECT_THROW(ParsePrefs(R"({"preferences":{"a":{"pairs":[]}}})"),
               ParseError);
  EXPECT_THROW(
      ParsePrefs(R"({"preferences":{"a":{"kind":"pairs","pairs":[["x"]]}}})"),
      ParseError);
  // The grid must be total.
  EXPECT_THROW(ParsePrefs(R"({
    "payoffs": {"x": {"a": 1, "b": 2}, "y": {"a": 1}},
    "preferences": {"a": {"kind": "selfish"}}})"),
               MissingPayoff);
  // An agent absent from the table.
  EXPECT_THROW(ParsePrefs(R"({
    "payoffs": {"x": {"a": 1}},
    "preferences": {"c": {"kind": "selfish"}}})"),
               MissingPayoff);
}

TEST(PrefsDocumentTest, DeclarationOrderKept) {
  PreferenceFamily f = ParsePrefs(
      R"({"preferences":{"b":{"kind":"pairs","pairs":[]},
                         "a":{"kind":"pairs","pairs":[]}}})");
  EXPECT_EQ(f.agents(), (std::vector<AgentId>{kB, kA}));
}

}  // namespace
}  // namespace seqgame
