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

#ifndef SEQGAME_RELATION_H_
#define SEQGAME_RELATION_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqgame/symbol.h"

namespace seqgame {

// A decidable binary relation over outcomes. For preferences, Holds(x, y)
// reads "y is preferred to x". Relations are immutable and cheap to copy.
class Relation {
 public:
  using Predicate = std::function<bool(OutcomeId, OutcomeId)>;
  using Pair = std::pair<OutcomeId, OutcomeId>;

  // The empty relation.
  Relation();

  static Relation FromPairs(std::span<const Pair> pairs);
  static Relation FromPredicate(Predicate holds,
                                std::vector<OutcomeId> domain_hint = {});

  bool Holds(OutcomeId x, OutcomeId y) const { return (*holds_)(x, y); }
  bool operator()(OutcomeId x, OutcomeId y) const { return Holds(x, y); }

  // Outcomes the relation was defined over, if known. Extensional relations
  // report the outcomes mentioned by their pairs, in first-mention order.
  const std::vector<OutcomeId>& domain_hint() const { return *domain_hint_; }

 private:
  std::shared_ptr<const Predicate> holds_;
  std::shared_ptr<const std::vector<OutcomeId>> domain_hint_;
};

// Nonempty x0 -> x1 -> ... -> xn -> x0, each arrow a Holds edge.
struct CyclePath {
  std::vector<OutcomeId> nodes;

  std::string ToString() const;
  friend bool operator==(const CyclePath&, const CyclePath&) = default;
};

class CyclicRelation : public std::runtime_error {
 public:
  explicit CyclicRelation(CyclePath cycle);
  const CyclePath& cycle() const { return cycle_; }

 private:
  CyclePath cycle_;
};

struct PropertyReport {
  bool irreflexive = false;
  bool transitive = false;
  bool total = false;

  friend bool operator==(const PropertyReport&,
                         const PropertyReport&) = default;
};

// Distinct elements of `carrier`, in order of first occurrence.
std::vector<OutcomeId> DistinctOutcomes(std::span<const OutcomeId> carrier);

// Holds(x, y) iff both x and y occur in `outcomes` and r.Holds(x, y).
Relation Restriction(const Relation& r, std::span<const OutcomeId> outcomes);

bool IsSubrelation(const Relation& r, const Relation& s,
                   std::span<const OutcomeId> carrier);

// Least transitive relation on the carrier containing Restriction(r, carrier).
Relation TransitiveClosure(const Relation& r,
                           std::span<const OutcomeId> carrier);

// First simple cycle found by depth-first search, trying start nodes and
// successors in carrier order.
std::optional<CyclePath> FindCycle(const Relation& r,
                                   std::span<const OutcomeId> carrier);

bool IsAcyclic(const Relation& r, std::span<const OutcomeId> carrier);

PropertyReport CheckProperties(const Relation& r,
                               std::span<const OutcomeId> carrier);

// Topological order of the carrier: every Holds(x, y) edge has x before y.
// Kahn-style, repeatedly taking the first remaining element (in carrier
// order) with no remaining predecessor under the transitive closure.
// Throws CyclicRelation if r has a cycle on the carrier.
std::vector<OutcomeId> TopologicalOrder(const Relation& r,
                                        std::span<const OutcomeId> carrier);

// Strict total order on the carrier that contains Restriction(r, carrier):
// Holds(x, y) iff x comes before y in TopologicalOrder(r, carrier).
Relation LinearExtension(const Relation& r,
                         std::span<const OutcomeId> carrier);

// True iff x has no r-successor among `items`.
template <typename T, typename Rel>
bool IsNoSucc(const Rel& r, const T& x, std::span<const T> items) {
  for (const T& y : items) {
    if (r(x, y)) return false;
  }
  return true;
}

}  // namespace seqgame

#endif  // SEQGAME_RELATION_H_
