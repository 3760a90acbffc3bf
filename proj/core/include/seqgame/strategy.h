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

#ifndef SEQGAME_STRATEGY_H_
#define SEQGAME_STRATEGY_H_

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "seqgame/game.h"
#include "seqgame/relation.h"
#include "seqgame/symbol.h"

namespace seqgame {

// A game in which every node also designates one chosen child. Children are
// kept in game order; left() and right() are the siblings before and after
// the chosen one. Immutable; copies share structure.
class StrategyProfile {
 public:
  static StrategyProfile Leaf(OutcomeId outcome);
  static StrategyProfile Node(AgentId owner, std::vector<StrategyProfile> left,
                              StrategyProfile chosen,
                              std::vector<StrategyProfile> right = {});
  // Node from the flattened children and the index of the chosen one.
  static StrategyProfile Node(AgentId owner,
                              std::vector<StrategyProfile> children,
                              std::size_t chosen_index);

  bool is_leaf() const { return rep_->children.empty(); }

  OutcomeId outcome() const;

  AgentId owner() const;
  std::span<const StrategyProfile> left() const;
  const StrategyProfile& chosen() const;
  std::span<const StrategyProfile> right() const;
  std::size_t chosen_index() const;

  // left ++ [chosen] ++ right. Empty for a leaf.
  std::span<const StrategyProfile> children() const { return rep_->children; }

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b);

 private:
  struct Rep {
    OutcomeId outcome;
    AgentId owner;
    std::vector<StrategyProfile> children;
    std::size_t chosen = 0;
  };

  explicit StrategyProfile(std::shared_ptr<const Rep> rep)
      : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// Per-agent outcome preferences. Agents without an explicit entry prefer
// nothing (the empty relation).
class PreferenceFamily {
 public:
  void Set(AgentId agent, Relation preference);
  const Relation& For(AgentId agent) const;
  bool Declares(AgentId agent) const { return prefs_.contains(agent); }

  // Declared agents in declaration order.
  const std::vector<AgentId>& agents() const { return agents_; }

 private:
  std::map<AgentId, Relation> prefs_;
  std::vector<AgentId> agents_;
  Relation empty_;
};

Game UnderlyingGame(const StrategyProfile& s);

OutcomeId InducedOutcome(const StrategyProfile& s);

// Node owners of s in pre-order of first appearance.
std::vector<AgentId> Owners(const StrategyProfile& s);

// Does `agent` prefer s2 to s?
bool StratPref(const PreferenceFamily& prefs, AgentId agent,
               const StrategyProfile& s, const StrategyProfile& s2);

// Can `agent` turn s into s2 by changing choices only at nodes it owns?
bool IsConvertible(AgentId agent, const StrategyProfile& s,
                   const StrategyProfile& s2);

// Every s2 with IsConvertible(agent, s, s2), each once. Order: a node's own
// choice varies slowest, then its children left to right, recursively.
std::vector<StrategyProfile> Conversions(AgentId agent,
                                         const StrategyProfile& s);

// Outcomes `agent` can induce by converting s, i.e. the induced outcomes of
// Conversions(agent, s), deduplicated, in left-to-right leaf order.
std::vector<OutcomeId> ReachableOutcomes(AgentId agent,
                                         const StrategyProfile& s);

bool IsHappy(const PreferenceFamily& prefs, const StrategyProfile& s,
             AgentId agent);

// Agents whose happiness decides Nash-ness of s: owners of s, then declared
// agents that own nothing. Any other agent has the empty preference.
std::vector<AgentId> RelevantAgents(const PreferenceFamily& prefs,
                                    const StrategyProfile& s);

bool IsNash(const PreferenceFamily& prefs, const StrategyProfile& s);

// Nash, and every child subprofile (chosen or not) is itself an SPE.
bool IsSpe(const PreferenceFamily& prefs, const StrategyProfile& s);

}  // namespace seqgame

#endif  // SEQGAME_STRATEGY_H_
