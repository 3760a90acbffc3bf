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

#ifndef SEQGAME_GAME_H_
#define SEQGAME_GAME_H_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "seqgame/symbol.h"

namespace seqgame {

// A finite sequential game: either a leaf enclosing an outcome, or a node
// owned by an agent with a first child and a (possibly empty) list of
// further children. Immutable; copies share structure.
class Game {
 public:
  static Game Leaf(OutcomeId outcome);
  static Game Node(AgentId owner, Game first, std::vector<Game> rest = {});

  bool is_leaf() const { return rep_->children.empty(); }

  // Leaf accessor. Must not be called on a node.
  OutcomeId outcome() const;

  // Node accessors. Must not be called on a leaf.
  AgentId owner() const;
  const Game& first() const;
  std::span<const Game> rest() const;

  // All children, first then rest. Empty for a leaf.
  std::span<const Game> children() const { return rep_->children; }

  friend bool operator==(const Game& a, const Game& b);

 private:
  struct Rep {
    OutcomeId outcome;
    AgentId owner;
    std::vector<Game> children;
  };

  explicit Game(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// Leaf outcomes, left to right, duplicates preserved.
std::vector<OutcomeId> UsedOutcomes(const Game& g);

// 1 + |rest| for a node, 0 for a leaf.
std::size_t ChildCount(const Game& g);

// Node owners in pre-order of first appearance, without duplicates.
std::vector<AgentId> Owners(const Game& g);

}  // namespace seqgame

#endif  // SEQGAME_GAME_H_
