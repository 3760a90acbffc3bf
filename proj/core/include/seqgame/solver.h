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

#ifndef SEQGAME_SOLVER_H_
#define SEQGAME_SOLVER_H_

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqgame/game.h"
#include "seqgame/relation.h"
#include "seqgame/strategy.h"
#include "seqgame/symbol.h"

namespace seqgame {

template <typename T>
struct SplitResult {
  std::vector<T> left;
  T choice;
  std::vector<T> right;
};

class EmptyList : public std::invalid_argument {
 public:
  EmptyList() : std::invalid_argument("cannot split an empty list") {}
};

// Splits `items` as left ++ [choice] ++ right where choice is the leftmost
// element with no r-successor among the elements after it. When r is
// irreflexive and transitive on the items, choice has no successor in left
// either.
template <typename T, typename Rel>
SplitResult<T> ChooseAndSplit(const Rel& r, std::span<const T> items) {
  if (items.empty()) throw EmptyList();
  std::size_t i = 0;
  while (!IsNoSucc(r, items[i], items.subspan(i + 1))) ++i;
  return SplitResult<T>{
      std::vector<T>(items.begin(), items.begin() + i), items[i],
      std::vector<T>(items.begin() + i + 1, items.end())};
}

// Generalized backward induction: solve the children, then let the owner
// pick among them with ChooseAndSplit under its preference on induced
// outcomes. Works for any preferences; yields an SPE when every preference
// is a strict total order on the used outcomes.
StrategyProfile BackwardInduction(const Game& g, const PreferenceFamily& prefs);

class CyclicPreference : public std::runtime_error {
 public:
  CyclicPreference(AgentId agent, CyclePath cycle);
  AgentId agent() const { return agent_; }
  const CyclePath& cycle() const { return cycle_; }

 private:
  AgentId agent_;
  CyclePath cycle_;
};

struct SpeSolution {
  StrategyProfile profile;
  // The linearly extended family the profile was computed under.
  PreferenceFamily extended;
  // Per agent, the used outcomes from least to most preferred.
  std::vector<std::pair<AgentId, std::vector<OutcomeId>>> orders;
};

// Restricts each relevant agent's preference to UsedOutcomes(g), extends it
// to a strict total order and runs backward induction under the extension.
// The result is an SPE for the original preferences. Relevant agents are
// the owners of g followed by the remaining declared agents. Throws
// CyclicPreference when some restricted preference has a cycle.
SpeSolution SolveSpeDetailed(const Game& g, const PreferenceFamily& prefs);
StrategyProfile SolveSpe(const Game& g, const PreferenceFamily& prefs);

class EmptyCycle : public std::invalid_argument {
 public:
  EmptyCycle() : std::invalid_argument("cycle must be nonempty") {}
};

// A one-node game owned by `agent` whose leaves are the cycle's outcomes in
// order. If the cycle is one of the agent's preference cycles the game has
// no Nash equilibrium.
Game NoEquilibriumGame(AgentId agent, const CyclePath& cycle);

}  // namespace seqgame

#endif  // SEQGAME_SOLVER_H_
