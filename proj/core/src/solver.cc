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

namespace seqgame {

StrategyProfile BackwardInduction(const Game& g,
                                  const PreferenceFamily& prefs) {
  if (g.is_leaf()) return StrategyProfile::Leaf(g.outcome());
  std::vector<StrategyProfile> solved;
  solved.reserve(g.children().size());
  for (const Game& child : g.children()) {
    solved.push_back(BackwardInduction(child, prefs));
  }
  const AgentId owner = g.owner();
  auto prefers = [&](const StrategyProfile& s, const StrategyProfile& s2) {
    return StratPref(prefs, owner, s, s2);
  };
  auto split = ChooseAndSplit<StrategyProfile>(prefers, solved);
  return StrategyProfile::Node(owner, std::move(split.left),
                               std::move(split.choice), std::move(split.right));
}

CyclicPreference::CyclicPreference(AgentId agent, CyclePath cycle)
    : std::runtime_error("preference of agent '" + agent.name() +
                         "' is cyclic: " + cycle.ToString()),
      agent_(agent),
      cycle_(std::move(cycle)) {}

SpeSolution SolveSpeDetailed(const Game& g, const PreferenceFamily& prefs) {
  const std::vector<OutcomeId> used = UsedOutcomes(g);
  std::vector<AgentId> agents = Owners(g);
  for (const AgentId& a : prefs.agents()) {
    if (std::find(agents.begin(), agents.end(), a) == agents.end()) {
      agents.push_back(a);
    }
  }

  SpeSolution solution{StrategyProfile::Leaf(OutcomeId()), {}, {}};
  for (const AgentId& a : agents) {
    const Relation restricted = Restriction(prefs.For(a), used);
    if (auto cycle = FindCycle(restricted, used)) {
      throw CyclicPreference(a, std::move(*cycle));
    }
    solution.orders.emplace_back(a, TopologicalOrder(restricted, used));
    solution.extended.Set(a, LinearExtension(restricted, used));
  }
  solution.profile = BackwardInduction(g, solution.extended);
  return solution;
}

StrategyProfile SolveSpe(const Game& g, const PreferenceFamily& prefs) {
  return SolveSpeDetailed(g, prefs).profile;
}

Game NoEquilibriumGame(AgentId agent, const CyclePath& cycle) {
  if (cycle.nodes.empty()) throw EmptyCycle();
  std::vector<Game> rest;
  for (std::size_t i = 1; i < cycle.nodes.size(); ++i) {
    rest.push_back(Game::Leaf(cycle.nodes[i]));
  }
  return Game::Node(agent, Game::Leaf(cycle.nodes.front()), std::move(rest));
}

}  // namespace seqgame
