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

#include "seqgame/oracle.h"

#include <limits>
#include <string>

#include "product.h"

namespace seqgame {
namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t SaturatingMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::vector<StrategyProfile> Enumerate(const Game& g) {
  if (g.is_leaf()) return {StrategyProfile::Leaf(g.outcome())};
  std::vector<std::vector<StrategyProfile>> per_child;
  per_child.reserve(g.children().size());
  for (const Game& child : g.children()) per_child.push_back(Enumerate(child));
  std::vector<StrategyProfile> out;
  for (std::size_t choice = 0; choice < per_child.size(); ++choice) {
    internal::ForEachProduct<StrategyProfile>(
        per_child, [&](std::span<const std::size_t> pick) {
          std::vector<StrategyProfile> children;
          children.reserve(pick.size());
          for (std::size_t i = 0; i < pick.size(); ++i) {
            children.push_back(per_child[i][pick[i]]);
          }
          out.push_back(
              StrategyProfile::Node(g.owner(), std::move(children), choice));
        });
  }
  return out;
}

}  // namespace

TooLarge::TooLarge(std::size_t count, std::size_t bound)
    : std::runtime_error(
          "game has " +
          (count == kSaturated ? std::string("too many")
                               : std::to_string(count)) +
          " strategy profiles, more than the bound of " +
          std::to_string(bound)),
      count_(count),
      bound_(bound) {}

std::size_t ProfileCount(const Game& g) {
  if (g.is_leaf()) return 1;
  std::size_t count = g.children().size();
  for (const Game& child : g.children()) {
    count = SaturatingMul(count, ProfileCount(child));
  }
  return count;
}

std::vector<StrategyProfile> AllProfiles(const Game& g,
                                         std::size_t max_profiles) {
  const std::size_t count = ProfileCount(g);
  if (count > max_profiles) throw TooLarge(count, max_profiles);
  return Enumerate(g);
}

bool IsHappyByEnumeration(const PreferenceFamily& prefs,
                          const StrategyProfile& s, AgentId agent) {
  for (const StrategyProfile& s2 : Conversions(agent, s)) {
    if (StratPref(prefs, agent, s, s2)) return false;
  }
  return true;
}

bool IsNashByEnumeration(const PreferenceFamily& prefs,
                         const StrategyProfile& s) {
  for (const AgentId& a : RelevantAgents(prefs, s)) {
    if (!IsHappyByEnumeration(prefs, s, a)) return false;
  }
  return true;
}

bool IsSpeByEnumeration(const PreferenceFamily& prefs,
                        const StrategyProfile& s) {
  if (!IsNashByEnumeration(prefs, s)) return false;
  for (const StrategyProfile& child : s.children()) {
    if (!IsSpeByEnumeration(prefs, child)) return false;
  }
  return true;
}

std::vector<ClassifiedProfile> FindEquilibria(const Game& g,
                                              const PreferenceFamily& prefs,
                                              EquilibriumFilter filter,
                                              std::size_t max_profiles) {
  std::vector<ClassifiedProfile> out;
  for (StrategyProfile& s : AllProfiles(g, max_profiles)) {
    const bool nash = IsNashByEnumeration(prefs, s);
    const bool spe = nash && IsSpeByEnumeration(prefs, s);
    const bool keep = filter == EquilibriumFilter::kAll ||
                      (filter == EquilibriumFilter::kNash && nash) ||
                      (filter == EquilibriumFilter::kSpe && spe);
    if (keep) out.push_back({std::move(s), nash, spe});
  }
  return out;
}

}  // namespace seqgame
