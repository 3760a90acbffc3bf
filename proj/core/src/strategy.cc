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

#include "seqgame/strategy.h"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "product.h"

namespace seqgame {
namespace {

void CollectOwners(const StrategyProfile& s, std::unordered_set<AgentId>& seen,
                   std::vector<AgentId>& out) {
  if (s.is_leaf()) return;
  if (seen.insert(s.owner()).second) out.push_back(s.owner());
  for (const StrategyProfile& child : s.children()) {
    CollectOwners(child, seen, out);
  }
}

void CollectReachable(AgentId agent, const StrategyProfile& s,
                      std::unordered_set<OutcomeId>& seen,
                      std::vector<OutcomeId>& out) {
  if (s.is_leaf()) {
    if (seen.insert(s.outcome()).second) out.push_back(s.outcome());
    return;
  }
  if (s.owner() != agent) {
    CollectReachable(agent, s.chosen(), seen, out);
    return;
  }
  for (const StrategyProfile& child : s.children()) {
    CollectReachable(agent, child, seen, out);
  }
}

}  // namespace

StrategyProfile StrategyProfile::Leaf(OutcomeId outcome) {
  return StrategyProfile(
      std::make_shared<const Rep>(Rep{outcome, AgentId(), {}, 0}));
}

StrategyProfile StrategyProfile::Node(AgentId owner,
                                      std::vector<StrategyProfile> left,
                                      StrategyProfile chosen,
                                      std::vector<StrategyProfile> right) {
  const std::size_t index = left.size();
  std::vector<StrategyProfile> children = std::move(left);
  children.reserve(index + 1 + right.size());
  children.push_back(std::move(chosen));
  for (StrategyProfile& s : right) children.push_back(std::move(s));
  return Node(owner, std::move(children), index);
}

StrategyProfile StrategyProfile::Node(AgentId owner,
                                      std::vector<StrategyProfile> children,
                                      std::size_t chosen_index) {
  assert(chosen_index < children.size());
  return StrategyProfile(std::make_shared<const Rep>(
      Rep{OutcomeId(), owner, std::move(children), chosen_index}));
}

OutcomeId StrategyProfile::outcome() const {
  assert(is_leaf());
  return rep_->outcome;
}

AgentId StrategyProfile::owner() const {
  assert(!is_leaf());
  return rep_->owner;
}

std::span<const StrategyProfile> StrategyProfile::left() const {
  return children().first(chosen_index());
}

const StrategyProfile& StrategyProfile::chosen() const {
  assert(!is_leaf());
  return rep_->children[rep_->chosen];
}

std::span<const StrategyProfile> StrategyProfile::right() const {
  return children().subspan(chosen_index() + 1);
}

std::size_t StrategyProfile::chosen_index() const {
  assert(!is_leaf());
  return rep_->chosen;
}

bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.outcome() == b.outcome();
  }
  if (a.owner() != b.owner() || a.chosen_index() != b.chosen_index()) {
    return false;
  }
  const auto ca = a.children();
  const auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void PreferenceFamily::Set(AgentId agent, Relation preference) {
  if (!prefs_.contains(agent)) agents_.push_back(agent);
  prefs_.insert_or_assign(agent, std::move(preference));
}

const Relation& PreferenceFamily::For(AgentId agent) const {
  auto it = prefs_.find(agent);
  return it == prefs_.end() ? empty_ : it->second;
}

Game UnderlyingGame(const StrategyProfile& s) {
  if (s.is_leaf()) return Game::Leaf(s.outcome());
  std::vector<Game> rest;
  if (s.left().empty()) {
    for (const StrategyProfile& r : s.right()) rest.push_back(UnderlyingGame(r));
    return Game::Node(s.owner(), UnderlyingGame(s.chosen()), std::move(rest));
  }
  const auto left = s.left();
  for (const StrategyProfile& l : left.subspan(1)) {
    rest.push_back(UnderlyingGame(l));
  }
  rest.push_back(UnderlyingGame(s.chosen()));
  for (const StrategyProfile& r : s.right()) rest.push_back(UnderlyingGame(r));
  return Game::Node(s.owner(), UnderlyingGame(left.front()), std::move(rest));
}

OutcomeId InducedOutcome(const StrategyProfile& s) {
  const StrategyProfile* node = &s;
  while (!node->is_leaf()) node = &node->chosen();
  return node->outcome();
}

std::vector<AgentId> Owners(const StrategyProfile& s) {
  std::unordered_set<AgentId> seen;
  std::vector<AgentId> out;
  CollectOwners(s, seen, out);
  return out;
}

bool StratPref(const PreferenceFamily& prefs, AgentId agent,
               const StrategyProfile& s, const StrategyProfile& s2) {
  return prefs.For(agent).Holds(InducedOutcome(s), InducedOutcome(s2));
}

bool IsConvertible(AgentId agent, const StrategyProfile& s,
                   const StrategyProfile& s2) {
  if (s.is_leaf() || s2.is_leaf()) {
    return s.is_leaf() && s2.is_leaf() && s.outcome() == s2.outcome();
  }
  if (s.owner() != s2.owner()) return false;
  const auto c = s.children();
  const auto c2 = s2.children();
  if (c.size() != c2.size()) return false;
  if (s.chosen_index() != s2.chosen_index() && s.owner() != agent) {
    return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!IsConvertible(agent, c[i], c2[i])) return false;
  }
  return true;
}

std::vector<StrategyProfile> Conversions(AgentId agent,
                                         const StrategyProfile& s) {
  if (s.is_leaf()) return {s};
  std::vector<std::vector<StrategyProfile>> per_child;
  per_child.reserve(s.children().size());
  for (const StrategyProfile& child : s.children()) {
    per_child.push_back(Conversions(agent, child));
  }
  std::vector<std::size_t> choices;
  if (s.owner() == agent) {
    for (std::size_t k = 0; k < per_child.size(); ++k) choices.push_back(k);
  } else {
    choices.push_back(s.chosen_index());
  }
  std::vector<StrategyProfile> out;
  for (std::size_t choice : choices) {
    internal::ForEachProduct<StrategyProfile>(
        per_child, [&](std::span<const std::size_t> pick) {
          std::vector<StrategyProfile> children;
          children.reserve(pick.size());
          for (std::size_t i = 0; i < pick.size(); ++i) {
            children.push_back(per_child[i][pick[i]]);
          }
          out.push_back(
              StrategyProfile::Node(s.owner(), std::move(children), choice));
        });
  }
  return out;
}

std::vector<OutcomeId> ReachableOutcomes(AgentId agent,
                                         const StrategyProfile& s) {
  std::unordered_set<OutcomeId> seen;
  std::vector<OutcomeId> out;
  CollectReachable(agent, s, seen, out);
  return out;
}

bool IsHappy(const PreferenceFamily& prefs, const StrategyProfile& s,
             AgentId agent) {
  const Relation& pref = prefs.For(agent);
  const OutcomeId current = InducedOutcome(s);
  for (const OutcomeId& alternative : ReachableOutcomes(agent, s)) {
    if (pref.Holds(current, alternative)) return false;
  }
  return true;
}

std::vector<AgentId> RelevantAgents(const PreferenceFamily& prefs,
                                    const StrategyProfile& s) {
  std::vector<AgentId> agents = Owners(s);
  for (const AgentId& a : prefs.agents()) {
    if (std::find(agents.begin(), agents.end(), a) == agents.end()) {
      agents.push_back(a);
    }
  }
  return agents;
}

bool IsNash(const PreferenceFamily& prefs, const StrategyProfile& s) {
  for (const AgentId& a : RelevantAgents(prefs, s)) {
    if (!IsHappy(prefs, s, a)) return false;
  }
  return true;
}

bool IsSpe(const PreferenceFamily& prefs, const StrategyProfile& s) {
  if (!IsNash(prefs, s)) return false;
  for (const StrategyProfile& child : s.children()) {
    if (!IsSpe(prefs, child)) return false;
  }
  return true;
}

}  // namespace seqgame
