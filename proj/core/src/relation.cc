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

#include "seqgame/relation.h"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace seqgame {
namespace {

std::uint64_t PairKey(OutcomeId x, OutcomeId y) {
  return (static_cast<std::uint64_t>(x.id()) << 32) | y.id();
}

// Dense adjacency over a deduplicated carrier.
struct Graph {
  std::vector<OutcomeId> nodes;
  std::vector<std::vector<bool>> edge;

  Graph(const Relation& r, std::span<const OutcomeId> carrier)
      : nodes(DistinctOutcomes(carrier)),
        edge(nodes.size(), std::vector<bool>(nodes.size(), false)) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        edge[i][j] = r.Holds(nodes[i], nodes[j]);
      }
    }
  }

  std::size_t size() const { return nodes.size(); }

  // reach[i][j] iff there is a nonempty path i -> ... -> j.
  std::vector<std::vector<bool>> Reachability() const {
    const std::size_t n = size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<std::size_t> frontier;
      for (std::size_t j = 0; j < n; ++j) {
        if (edge[start][j]) {
          reach[start][j] = true;
          frontier.push_back(j);
        }
      }
      while (!frontier.empty()) {
        const std::size_t u = frontier.back();
        frontier.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
          if (edge[u][v] && !reach[start][v]) {
            reach[start][v] = true;
            frontier.push_back(v);
          }
        }
      }
    }
    return reach;
  }
};

enum class Color { kWhite, kGray, kBlack };

bool CycleSearch(const Graph& g, std::size_t u, std::vector<Color>& color,
                 std::vector<std::size_t>& stack, CyclePath& out) {
  color[u] = Color::kGray;
  stack.push_back(u);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.edge[u][v]) continue;
    if (color[v] == Color::kGray) {
      auto it = std::find(stack.begin(), stack.end(), v);
      for (; it != stack.end(); ++it) out.nodes.push_back(g.nodes[*it]);
      return true;
    }
    if (color[v] == Color::kWhite && CycleSearch(g, v, color, stack, out)) {
      return true;
    }
  }
  stack.pop_back();
  color[u] = Color::kBlack;
  return false;
}

}  // namespace

Relation::Relation()
    : holds_(std::make_shared<const Predicate>(
          [](OutcomeId, OutcomeId) { return false; })),
      domain_hint_(std::make_shared<const std::vector<OutcomeId>>()) {}

Relation Relation::FromPairs(std::span<const Pair> pairs) {
  auto keys = std::make_shared<std::unordered_set<std::uint64_t>>();
  std::vector<OutcomeId> mentioned;
  for (const auto& [x, y] : pairs) {
    keys->insert(PairKey(x, y));
    mentioned.push_back(x);
    mentioned.push_back(y);
  }
  return FromPredicate(
      [keys = std::shared_ptr<const std::unordered_set<std::uint64_t>>(keys)](
          OutcomeId x, OutcomeId y) { return keys->contains(PairKey(x, y)); },
      DistinctOutcomes(mentioned));
}

Relation Relation::FromPredicate(Predicate holds,
                                 std::vector<OutcomeId> domain_hint) {
  Relation r;
  r.holds_ = std::make_shared<const Predicate>(std::move(holds));
  r.domain_hint_ =
      std::make_shared<const std::vector<OutcomeId>>(std::move(domain_hint));
  return r;
}

std::string CyclePath::ToString() const {
  std::ostringstream os;
  for (const OutcomeId& x : nodes) os << x << " -> ";
  if (!nodes.empty()) os << nodes.front();
  return os.str();
}

CyclicRelation::CyclicRelation(CyclePath cycle)
    : std::runtime_error("relation has a cycle: " + cycle.ToString()),
      cycle_(std::move(cycle)) {}

std::vector<OutcomeId> DistinctOutcomes(std::span<const OutcomeId> carrier) {
  std::vector<OutcomeId> out;
  std::unordered_set<OutcomeId> seen;
  for (const OutcomeId& x : carrier) {
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

Relation Restriction(const Relation& r, std::span<const OutcomeId> outcomes) {
  auto members = std::make_shared<const std::unordered_set<OutcomeId>>(
      outcomes.begin(), outcomes.end());
  return Relation::FromPredicate(
      [r, members](OutcomeId x, OutcomeId y) {
        return members->contains(x) && members->contains(y) && r.Holds(x, y);
      },
      DistinctOutcomes(outcomes));
}

bool IsSubrelation(const Relation& r, const Relation& s,
                   std::span<const OutcomeId> carrier) {
  const std::vector<OutcomeId> nodes = DistinctOutcomes(carrier);
  for (const OutcomeId& x : nodes) {
    for (const OutcomeId& y : nodes) {
      if (r.Holds(x, y) && !s.Holds(x, y)) return false;
    }
  }
  return true;
}

Relation TransitiveClosure(const Relation& r,
                           std::span<const OutcomeId> carrier) {
  const Graph g(r, carrier);
  const auto reach = g.Reachability();
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (reach[i][j]) pairs.emplace_back(g.nodes[i], g.nodes[j]);
    }
  }
  Relation closure = Relation::FromPairs(pairs);
  return Relation::FromPredicate(
      [closure](OutcomeId x, OutcomeId y) { return closure.Holds(x, y); },
      g.nodes);
}

std::optional<CyclePath> FindCycle(const Relation& r,
                                   std::span<const OutcomeId> carrier) {
  const Graph g(r, carrier);
  std::vector<Color> color(g.size(), Color::kWhite);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (color[start] != Color::kWhite) continue;
    CyclePath cycle;
    if (CycleSearch(g, start, color, stack, cycle)) return cycle;
  }
  return std::nullopt;
}

bool IsAcyclic(const Relation& r, std::span<const OutcomeId> carrier) {
  return !FindCycle(r, carrier).has_value();
}

PropertyReport CheckProperties(const Relation& r,
                               std::span<const OutcomeId> carrier) {
  const Graph g(r, carrier);
  const std::size_t n = g.size();
  PropertyReport report{true, true, true};
  for (std::size_t i = 0; i < n; ++i) {
    if (g.edge[i][i]) report.irreflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !g.edge[i][j] && !g.edge[j][i]) report.total = false;
      if (!g.edge[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (g.edge[j][k] && !g.edge[i][k]) report.transitive = false;
      }
    }
  }
  return report;
}

std::vector<OutcomeId> TopologicalOrder(const Relation& r,
                                        std::span<const OutcomeId> carrier) {
  if (auto cycle = FindCycle(r, carrier)) throw CyclicRelation(*cycle);
  const Graph g(r, carrier);
  const auto closure = g.Reachability();
  const std::size_t n = g.size();
  std::vector<bool> placed(n, false);
  std::vector<OutcomeId> order;
  order.reserve(n);
  while (order.size() < n) {
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y) {
        if (!placed[y] && closure[y][x]) minimal = false;
      }
      if (minimal) {
        placed[x] = true;
        order.push_back(g.nodes[x]);
        break;
      }
    }
  }
  return order;
}

Relation LinearExtension(const Relation& r,
                         std::span<const OutcomeId> carrier) {
  std::vector<OutcomeId> order = TopologicalOrder(r, carrier);
  auto rank = std::make_shared<std::unordered_map<OutcomeId, std::size_t>>();
  for (std::size_t i = 0; i < order.size(); ++i) rank->emplace(order[i], i);
  return Relation::FromPredicate(
      [rank = std::shared_ptr<const std::unordered_map<OutcomeId, std::size_t>>(
           rank)](OutcomeId x, OutcomeId y) {
        auto ix = rank->find(x);
        auto iy = rank->find(y);
        return ix != rank->end() && iy != rank->end() &&
               ix->second < iy->second;
      },
      std::move(order));
}

}  // namespace seqgame
