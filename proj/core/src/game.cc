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

#include "seqgame/game.h"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace seqgame {
namespace {

void CollectOutcomes(const Game& g, std::vector<OutcomeId>& out) {
  if (g.is_leaf()) {
    out.push_back(g.outcome());
    return;
  }
  for (const Game& child : g.children()) CollectOutcomes(child, out);
}

void CollectOwners(const Game& g, std::unordered_set<AgentId>& seen,
                   std::vector<AgentId>& out) {
  if (g.is_leaf()) return;
  if (seen.insert(g.owner()).second) out.push_back(g.owner());
  for (const Game& child : g.children()) CollectOwners(child, seen, out);
}

}  // namespace

Game Game::Leaf(OutcomeId outcome) {
  return Game(std::make_shared<const Rep>(Rep{outcome, AgentId(), {}}));
}

Game Game::Node(AgentId owner, Game first, std::vector<Game> rest) {
  std::vector<Game> children;
  children.reserve(rest.size() + 1);
  children.push_back(std::move(first));
  for (Game& g : rest) children.push_back(std::move(g));
  return Game(
      std::make_shared<const Rep>(Rep{OutcomeId(), owner, std::move(children)}));
}

OutcomeId Game::outcome() const {
  assert(is_leaf());
  return rep_->outcome;
}

AgentId Game::owner() const {
  assert(!is_leaf());
  return rep_->owner;
}

const Game& Game::first() const {
  assert(!is_leaf());
  return rep_->children.front();
}

std::span<const Game> Game::rest() const {
  assert(!is_leaf());
  return children().subspan(1);
}

bool operator==(const Game& a, const Game& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.outcome() == b.outcome();
  }
  if (a.owner() != b.owner()) return false;
  const auto ca = a.children();
  const auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<OutcomeId> UsedOutcomes(const Game& g) {
  std::vector<OutcomeId> out;
  CollectOutcomes(g, out);
  return out;
}

std::size_t ChildCount(const Game& g) {
  return g.is_leaf() ? 0 : 1 + g.rest().size();
}

std::vector<AgentId> Owners(const Game& g) {
  std::unordered_set<AgentId> seen;
  std::vector<AgentId> out;
  CollectOwners(g, seen, out);
  return out;
}

}  // namespace seqgame
