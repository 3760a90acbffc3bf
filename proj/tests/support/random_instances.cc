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

#include "support/random_instances.h"

#include <algorithm>

#include "seqgame/oracle.h"

namespace seqgame::testing {
namespace {

Game GrowGame(Rng& rng, const GameShape& shape, int depth,
              const std::vector<OutcomeId>& outcomes,
              const std::vector<AgentId>& agents) {
  std::uniform_int_distribution<std::size_t> pick_outcome(0,
                                                          outcomes.size() - 1);
  // Leaves get likelier with depth; the root is always a node.
  std::bernoulli_distribution leaf(depth == 0 ? 0.0 : 0.25 + 0.15 * depth);
  if (depth >= shape.max_depth || leaf(rng)) {
    return Game::Leaf(outcomes[pick_outcome(rng)]);
  }
  std::uniform_int_distribution<std::size_t> arity(1, shape.max_arity);
  std::uniform_int_distribution<std::size_t> pick_agent(0, agents.size() - 1);
  const AgentId owner = agents[pick_agent(rng)];
  const std::size_t n = arity(rng);
  Game first = GrowGame(rng, shape, depth + 1, outcomes, agents);
  std::vector<Game> rest;
  for (std::size_t i = 1; i < n; ++i) {
    rest.push_back(GrowGame(rng, shape, depth + 1, outcomes, agents));
  }
  return Game::Node(owner, std::move(first), std::move(rest));
}

}  // namespace

std::vector<OutcomeId> OutcomePool(std::size_t n) {
  std::vector<OutcomeId> pool;
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back("o" + std::to_string(i));
  return pool;
}

std::vector<AgentId> AgentPool(std::size_t n) {
  std::vector<AgentId> pool;
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back("a" + std::to_string(i));
  return pool;
}

Game RandomGame(Rng& rng, const GameShape& shape) {
  const auto outcomes = OutcomePool(shape.outcomes);
  const auto agents = AgentPool(shape.agents);
  while (true) {
    Game g = GrowGame(rng, shape, 0, outcomes, agents);
    if (shape.max_profiles == 0 || ProfileCount(g) <= shape.max_profiles) {
      return g;
    }
  }
}

StrategyProfile RandomProfile(Rng& rng, const Game& g) {
  if (g.is_leaf()) return StrategyProfile::Leaf(g.outcome());
  std::vector<StrategyProfile> children;
  for (const Game& child : g.children()) {
    children.push_back(RandomProfile(rng, child));
  }
  std::uniform_int_distribution<std::size_t> choose(0, children.size() - 1);
  const std::size_t chosen = choose(rng);
  return StrategyProfile::Node(g.owner(), std::move(children), chosen);
}

Relation RandomTotalOrder(Rng& rng, const std::vector<OutcomeId>& outcomes) {
  std::vector<OutcomeId> ranking = outcomes;
  std::shuffle(ranking.begin(), ranking.end(), rng);
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      pairs.emplace_back(ranking[i], ranking[j]);
    }
  }
  return Relation::FromPairs(pairs);
}

Relation RandomAcyclic(Rng& rng, const std::vector<OutcomeId>& outcomes,
                       double density) {
  std::vector<OutcomeId> ranking = outcomes;
  std::shuffle(ranking.begin(), ranking.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      if (keep(rng)) pairs.emplace_back(ranking[i], ranking[j]);
    }
  }
  return Relation::FromPairs(pairs);
}

Relation RandomRelation(Rng& rng, const std::vector<OutcomeId>& outcomes,
                        double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Relation::Pair> pairs;
  for (const OutcomeId& x : outcomes) {
    for (const OutcomeId& y : outcomes) {
      if (keep(rng)) pairs.emplace_back(x, y);
    }
  }
  return Relation::FromPairs(pairs);
}

std::vector<Relation::Pair> PairsOf(const Relation& r,
                                    const std::vector<OutcomeId>& carrier) {
  std::vector<Relation::Pair> pairs;
  for (const OutcomeId& x : carrier) {
    for (const OutcomeId& y : carrier) {
      if (r.Holds(x, y)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

}  // namespace seqgame::testing
