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

#ifndef SEQGAME_ORACLE_H_
#define SEQGAME_ORACLE_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seqgame/game.h"
#include "seqgame/strategy.h"

namespace seqgame {

// Brute-force ground truth. Everything here applies the equilibrium
// definitions literally, enumerating conversions instead of reasoning about
// reachable outcomes, so it can check the faster routes in strategy.h.

inline constexpr std::size_t kDefaultMaxProfiles = 100000;

class TooLarge : public std::runtime_error {
 public:
  TooLarge(std::size_t count, std::size_t bound);
  // Saturates at SIZE_MAX.
  std::size_t count() const { return count_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t count_;
  std::size_t bound_;
};

// Product of node arities, saturating at SIZE_MAX.
std::size_t ProfileCount(const Game& g);

// Every profile whose underlying game is g, once each. The root's choice
// varies slowest, then children left to right, recursively. Throws TooLarge
// when ProfileCount(g) > max_profiles.
std::vector<StrategyProfile> AllProfiles(
    const Game& g, std::size_t max_profiles = kDefaultMaxProfiles);

bool IsHappyByEnumeration(const PreferenceFamily& prefs,
                          const StrategyProfile& s, AgentId agent);
bool IsNashByEnumeration(const PreferenceFamily& prefs,
                         const StrategyProfile& s);
bool IsSpeByEnumeration(const PreferenceFamily& prefs,
                        const StrategyProfile& s);

enum class EquilibriumFilter { kNash, kSpe, kAll };

struct ClassifiedProfile {
  StrategyProfile profile;
  bool nash = false;
  bool spe = false;
};

// Classifies every profile of g; keeps those passing `filter`, in
// AllProfiles order.
std::vector<ClassifiedProfile> FindEquilibria(
    const Game& g, const PreferenceFamily& prefs, EquilibriumFilter filter,
    std::size_t max_profiles = kDefaultMaxProfiles);

}  // namespace seqgame

#endif  // SEQGAME_ORACLE_H_
